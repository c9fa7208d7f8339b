"use strict";(()=>{var C=class extends Error{constructor(e,n){super(`${e}: ${n}`),this.name="SchemaError",this.field=e}};function zt(t){return typeof t=="object"&&t!==null&&!Array.isArray(t)}function wi(t){return typeof t=="number"&&Number.isFinite(t)}function _i(t){return typeof t=="number"&&Number.isInteger(t)}function $e(t,e,n){let r=t[n];if(typeof r!="string")throw new C(`${e}.${n}`,"expected a string");return r}function bi(t,e,n){let r=t[n];if(typeof r!="boolean")throw new C(`${e}.${n}`,"expected a boolean");return r}function vt(t,e,n,r){let i=t[n];if(!_i(i))throw new C(`${e}.${n}`,"expected an integer");if(i<r)throw new C(`${e}.${n}`,`must be >= ${r}`);return i}function ct(t,e,n){let r=t[n];if(!wi(r))throw new C(`${e}.${n}`,"expected a finite number");return r}function Ei(t,e){if(!zt(t))throw new C(e,"expected an object");let n=vt(t,e,"id",0),r=$e(t,e,"label");if(r.length===0)throw new C(`${e}.label`,"must not be empty");let i=vt(t,e,"frequency",1),o=bi(t,e,"marker"),a=t.attrs;if(!zt(a))throw new C(`${e}.attrs`,"expected an object");let s={};for(let g of Object.keys(a)){let h=a[g];if(typeof h!="string")throw new C(`${e}.attrs.${g}`,"expected a string");s[g]=h}let u="x"in t,l="y"in t;if(u!==l)throw new C(`${e}.${u?"x":"y"}`,"x and y must be given together");let f={id:n,label:r,frequency:i,marker:o,attrs:s};return u&&(f.x=ct(t,e,"x"),f.y=ct(t,e,"y")),f}function Mi(t,e,n,r){if(!zt(t))throw new C(e,"expected an object");let i=vt(t,e,"source",0),o=vt(t,e,"target",0);if(!n.has(i))throw new C(`${e}.source`,"references an unknown node");if(!n.has(o))throw new C(`${e}.target`,"references an unknown node");if(i===o)throw new C(`${e}.target`,"self loops are not allowed");let a=vt(t,e,"c",1),s=ct(t,e,"expected");if(s<=0)throw new C(`${e}.expected`,"must be positive");let u=ct(t,e,"e"),l=ct(t,e,"d");if(l<=0)throw new C(`${e}.d`,"must be positive; non-adjacent pairs do not belong here");let f={source:i,target:o,c:a,expected:s,e:u,d:l};if(r==="sample"){if(f.p=ct(t,e,"p"),f.p<0||f.p>1)throw new C(`${e}.p`,"must lie in [0, 1]")}else if("p"in t)throw new C(`${e}.p`,"only sample mode edges carry p");return f}function Si(t){if(!zt(t))throw new C("meta","expected an object");let e=vt(t,"meta","N",1),n=vt(t,"meta","M",1),r=$e(t,"meta","mode");if(r!=="population"&&r!=="sample")throw new C("meta.mode",'expected "population" or "sample"');let i=ct(t,"meta","min_d");if(i<0)throw new C("meta.min_d","must be >= 0");let o={N:e,M:n,mode:r,min_d:i};if(r==="sample"){if(o.alpha=ct(t,"meta","alpha"),o.alpha<=0||o.alpha>=1)throw new C("meta.alpha","must lie in (0, 1)")}else if("alpha"in t)throw new C("meta.alpha","only sample mode carries alpha");return"created"in t&&(o.created=$e(t,"meta","created")),o}function an(t){if(!zt(t))throw new C("document","expected a JSON object");for(let s of["nodes","edges","meta"])if(!(s in t))throw new C(s,"missing");if(!Array.isArray(t.nodes))throw new C("nodes","expected an array");if(!Array.isArray(t.edges))throw new C("edges","expected an array");let e=Si(t.meta),n=[],r=new Set,i=0;if(t.nodes.forEach((s,u)=>{let l=Ei(s,`nodes[${u}]`);if(r.has(l.id))throw new C(`nodes[${u}].id`,"duplicate node id");r.add(l.id),l.x!==void 0&&(i+=1),n.push(l)}),i!==0&&i!==n.length)throw new C("nodes","positions must cover every node or none");let o=new Set,a=[];return t.edges.forEach((s,u)=>{let l=Mi(s,`edges[${u}]`,r,e.mode),f=l.source<l.target?`${l.source}:${l.target}`:`${l.target}:${l.source}`;if(o.has(f))throw new C(`edges[${u}]`,"duplicate pair");o.add(f),a.push(l)}),{nodes:n,edges:a,meta:e,hasPositions:i>0&&i===n.length}}var Ni={value:()=>{}};function un(){for(var t=0,e=arguments.length,n={},r;t<e;++t){if(!(r=arguments[t]+"")||r in n||/[\s.]/.test(r))throw new Error("illegal type: "+r);n[r]=[]}return new ee(n)}function ee(t){this._=t}function ki(t,e){return t.trim().split(/^|\s+/).map(function(n){var r="",i=n.indexOf(".");if(i>=0&&(r=n.slice(i+1),n=n.slice(0,i)),n&&!e.hasOwnProperty(n))throw new Error("unknown type: "+n);return{type:n,name:r}})}ee.prototype=un.prototype={constructor:ee,on:function(t,e){var n=this._,r=ki(t+"",n),i,o=-1,a=r.length;if(arguments.length<2){for(;++o<a;)if((i=(t=r[o]).type)&&(i=Ai(n[i],t.name)))return i;return}if(e!=null&&typeof e!="function")throw new Error("invalid callback: "+e);for(;++o<a;)if(i=(t=r[o]).type)n[i]=sn(n[i],t.name,e);else if(e==null)for(i in n)n[i]=sn(n[i],t.name,null);return this},copy:function(){var t={},e=this._;for(var n in e)t[n]=e[n].slice();return new ee(t)},call:function(t,e){if((i=arguments.length-2)>0)for(var n=new Array(i),r=0,i,o;r<i;++r)n[r]=arguments[r+2];if(!this._.hasOwnProperty(t))throw new Error("unknown type: "+t);for(o=this._[t],r=0,i=o.length;r<i;++r)o[r].value.apply(e,n)},apply:function(t,e,n){if(!this._.hasOwnProperty(t))throw new Error("unknown type: "+t);for(var r=this._[t],i=0,o=r.length;i<o;++i)r[i].value.apply(e,n)}};function Ai(t,e){for(var n=0,r=t.length,i;n<r;++n)if((i=t[n]).name===e)return i.value}function sn(t,e,n){for(var r=0,i=t.length;r<i;++r)if(t[r].name===e){t[r]=Ni,t=t.slice(0,r).concat(t.slice(r+1));break}return n!=null&&t.push({name:e,value:n}),t}var st=un;var ne="http://www.w3.org/1999/xhtml",Ce={svg:"http://www.w3.org/2000/svg",xhtml:ne,xlink:"http://www.w3.org/1999/xlink",xml:"http://www.w3.org/XML/1998/namespace",xmlns:"http://www.w3.org/2000/xmlns/"};function ut(t){var e=t+="",n=e.indexOf(":");return n>=0&&(e=t.slice(0,n))!=="xmlns"&&(t=t.slice(n+1)),Ce.hasOwnProperty(e)?{space:Ce[e],local:t}:t}function Ti(t){return function(){var e=this.ownerDocument,n=this.namespaceURI;return n===ne&&e.documentElement.namespaceURI===ne?e.createElement(t):e.createElementNS(n,t)}}function Ii(t){return function(){return this.ownerDocument.createElementNS(t.space,t.local)}}function re(t){var e=ut(t);return(e.local?Ii:Ti)(e)}function $i(){}function yt(t){return t==null?$i:function(){return this.querySelector(t)}}function ln(t){typeof t!="function"&&(t=yt(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],a=o.length,s=r[i]=new Array(a),u,l,f=0;f<a;++f)(u=o[f])&&(l=t.call(u,u.__data__,f,o))&&("__data__"in u&&(l.__data__=u.__data__),s[f]=l);return new O(r,this._parents)}function ze(t){return t==null?[]:Array.isArray(t)?t:Array.from(t)}function Ci(){return[]}function Dt(t){return t==null?Ci:function(){return this.querySelectorAll(t)}}function zi(t){return function(){return ze(t.apply(this,arguments))}}function fn(t){typeof t=="function"?t=zi(t):t=Dt(t);for(var e=this._groups,n=e.length,r=[],i=[],o=0;o<n;++o)for(var a=e[o],s=a.length,u,l=0;l<s;++l)(u=a[l])&&(r.push(t.call(u,u.__data__,l,a)),i.push(u));return new O(r,i)}function Lt(t){return function(){return this.matches(t)}}function ie(t){return function(e){return e.matches(t)}}var Di=Array.prototype.find;function Li(t){return function(){return Di.call(this.children,t)}}function Oi(){return this.firstElementChild}function cn(t){return this.select(t==null?Oi:Li(typeof t=="function"?t:ie(t)))}var Gi=Array.prototype.filter;function qi(){return Array.from(this.children)}function Bi(t){return function(){return Gi.call(this.children,t)}}function hn(t){return this.selectAll(t==null?qi:Bi(typeof t=="function"?t:ie(t)))}function pn(t){typeof t!="function"&&(t=Lt(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],a=o.length,s=r[i]=[],u,l=0;l<a;++l)(u=o[l])&&t.call(u,u.__data__,l,o)&&s.push(u);return new O(r,this._parents)}function oe(t){return new Array(t.length)}function dn(){return new O(this._enter||this._groups.map(oe),this._parents)}function Ot(t,e){this.ownerDocument=t.ownerDocument,this.namespaceURI=t.namespaceURI,this._next=null,this._parent=t,this.__data__=e}Ot.prototype={constructor:Ot,appendChild:function(t){return this._parent.insertBefore(t,this._next)},insertBefore:function(t,e){return this._parent.insertBefore(t,e)},querySelector:function(t){return this._parent.querySelector(t)},querySelectorAll:function(t){return this._parent.querySelectorAll(t)}};function mn(t){return function(){return t}}function Ri(t,e,n,r,i,o){for(var a=0,s,u=e.length,l=o.length;a<l;++a)(s=e[a])?(s.__data__=o[a],r[a]=s):n[a]=new Ot(t,o[a]);for(;a<u;++a)(s=e[a])&&(i[a]=s)}function Pi(t,e,n,r,i,o,a){var s,u,l=new Map,f=e.length,g=o.length,h=new Array(f),c;for(s=0;s<f;++s)(u=e[s])&&(h[s]=c=a.call(u,u.__data__,s,e)+"",l.has(c)?i[s]=u:l.set(c,u));for(s=0;s<g;++s)c=a.call(t,o[s],s,o)+"",(u=l.get(c))?(r[s]=u,u.__data__=o[s],l.delete(c)):n[s]=new Ot(t,o[s]);for(s=0;s<f;++s)(u=e[s])&&l.get(h[s])===u&&(i[s]=u)}function Hi(t){return t.__data__}function gn(t,e){if(!arguments.length)return Array.from(this,Hi);var n=e?Pi:Ri,r=this._parents,i=this._groups;typeof t!="function"&&(t=mn(t));for(var o=i.length,a=new Array(o),s=new Array(o),u=new Array(o),l=0;l<o;++l){var f=r[l],g=i[l],h=g.length,c=Vi(t.call(f,f&&f.__data__,l,r)),w=c.length,v=s[l]=new Array(w),x=a[l]=new Array(w),m=u[l]=new Array(h);n(f,g,v,x,m,c,e);for(var _=0,S=0,d,M;_<w;++_)if(d=v[_]){for(_>=S&&(S=_+1);!(M=x[S])&&++S<w;);d._next=M||null}}return a=new O(a,r),a._enter=s,a._exit=u,a}function Vi(t){return typeof t=="object"&&"length"in t?t:Array.from(t)}function xn(){return new O(this._exit||this._groups.map(oe),this._parents)}function vn(t,e,n){var r=this.enter(),i=this,o=this.exit();return typeof t=="function"?(r=t(r),r&&(r=r.selection())):r=r.append(t+""),e!=null&&(i=e(i),i&&(i=i.selection())),n==null?o.remove():n(o),r&&i?r.merge(i).order():i}function yn(t){for(var e=t.selection?t.selection():t,n=this._groups,r=e._groups,i=n.length,o=r.length,a=Math.min(i,o),s=new Array(i),u=0;u<a;++u)for(var l=n[u],f=r[u],g=l.length,h=s[u]=new Array(g),c,w=0;w<g;++w)(c=l[w]||f[w])&&(h[w]=c);for(;u<i;++u)s[u]=n[u];return new O(s,this._parents)}function wn(){for(var t=this._groups,e=-1,n=t.length;++e<n;)for(var r=t[e],i=r.length-1,o=r[i],a;--i>=0;)(a=r[i])&&(o&&a.compareDocumentPosition(o)^4&&o.parentNode.insertBefore(a,o),o=a);return this}function _n(t){t||(t=Fi);function e(g,h){return g&&h?t(g.__data__,h.__data__):!g-!h}for(var n=this._groups,r=n.length,i=new Array(r),o=0;o<r;++o){for(var a=n[o],s=a.length,u=i[o]=new Array(s),l,f=0;f<s;++f)(l=a[f])&&(u[f]=l);u.sort(e)}return new O(i,this._parents).order()}function Fi(t,e){return t<e?-1:t>e?1:t>=e?0:NaN}function bn(){var t=arguments[0];return arguments[0]=this,t.apply(null,arguments),this}function En(){return Array.from(this)}function Mn(){for(var t=this._groups,e=0,n=t.length;e<n;++e)for(var r=t[e],i=0,o=r.length;i<o;++i){var a=r[i];if(a)return a}return null}function Sn(){let t=0;for(let e of this)++t;return t}function Nn(){return!this.node()}function kn(t){for(var e=this._groups,n=0,r=e.length;n<r;++n)for(var i=e[n],o=0,a=i.length,s;o<a;++o)(s=i[o])&&t.call(s,s.__data__,o,i);return this}function Xi(t){return function(){this.removeAttribute(t)}}function Yi(t){return function(){this.removeAttributeNS(t.space,t.local)}}function Ui(t,e){return function(){this.setAttribute(t,e)}}function Zi(t,e){return function(){this.setAttributeNS(t.space,t.local,e)}}function Qi(t,e){return function(){var n=e.apply(this,arguments);n==null?this.removeAttribute(t):this.setAttribute(t,n)}}function Ki(t,e){return function(){var n=e.apply(this,arguments);n==null?this.removeAttributeNS(t.space,t.local):this.setAttributeNS(t.space,t.local,n)}}function An(t,e){var n=ut(t);if(arguments.length<2){var r=this.node();return n.local?r.getAttributeNS(n.space,n.local):r.getAttribute(n)}return this.each((e==null?n.local?Yi:Xi:typeof e=="function"?n.local?Ki:Qi:n.local?Zi:Ui)(n,e))}function ae(t){return t.ownerDocument&&t.ownerDocument.defaultView||t.document&&t||t.defaultView}function Wi(t){return function(){this.style.removeProperty(t)}}function Ji(t,e,n){return function(){this.style.setProperty(t,e,n)}}function ji(t,e,n){return function(){var r=e.apply(this,arguments);r==null?this.style.removeProperty(t):this.style.setProperty(t,r,n)}}function Tn(t,e,n){return arguments.length>1?this.each((e==null?Wi:typeof e=="function"?ji:Ji)(t,e,n??"")):ht(this.node(),t)}function ht(t,e){return t.style.getPropertyValue(e)||ae(t).getComputedStyle(t,null).getPropertyValue(e)}function to(t){return function(){delete this[t]}}function eo(t,e){return function(){this[t]=e}}function no(t,e){return function(){var n=e.apply(this,arguments);n==null?delete this[t]:this[t]=n}}function In(t,e){return arguments.length>1?this.each((e==null?to:typeof e=="function"?no:eo)(t,e)):this.node()[t]}function $n(t){return t.trim().split(/^|\s+/)}function De(t){return t.classList||new Cn(t)}function Cn(t){this._node=t,this._names=$n(t.getAttribute("class")||"")}Cn.prototype={add:function(t){var e=this._names.indexOf(t);e<0&&(this._names.push(t),this._node.setAttribute("class",this._names.join(" ")))},remove:function(t){var e=this._names.indexOf(t);e>=0&&(this._names.splice(e,1),this._node.setAttribute("class",this._names.join(" ")))},contains:function(t){return this._names.indexOf(t)>=0}};function zn(t,e){for(var n=De(t),r=-1,i=e.length;++r<i;)n.add(e[r])}function Dn(t,e){for(var n=De(t),r=-1,i=e.length;++r<i;)n.remove(e[r])}function ro(t){return function(){zn(this,t)}}function io(t){return function(){Dn(this,t)}}function oo(t,e){return function(){(e.apply(this,arguments)?zn:Dn)(this,t)}}function Ln(t,e){var n=$n(t+"");if(arguments.length<2){for(var r=De(this.node()),i=-1,o=n.length;++i<o;)if(!r.contains(n[i]))return!1;return!0}return this.each((typeof e=="function"?oo:e?ro:io)(n,e))}function ao(){this.textContent=""}function so(t){return function(){this.textContent=t}}function uo(t){return function(){var e=t.apply(this,arguments);this.textContent=e??""}}function On(t){return arguments.length?this.each(t==null?ao:(typeof t=="function"?uo:so)(t)):this.node().textContent}function lo(){this.innerHTML=""}function fo(t){return function(){this.innerHTML=t}}function co(t){return function(){var e=t.apply(this,arguments);this.innerHTML=e??""}}function Gn(t){return arguments.length?this.each(t==null?lo:(typeof t=="function"?co:fo)(t)):this.node().innerHTML}function ho(){this.nextSibling&&this.parentNode.appendChild(this)}function qn(){return this.each(ho)}function po(){this.previousSibling&&this.parentNode.insertBefore(this,this.parentNode.firstChild)}function Bn(){return this.each(po)}function Rn(t){var e=typeof t=="function"?t:re(t);return this.select(function(){return this.appendChild(e.apply(this,arguments))})}function mo(){return null}function Pn(t,e){var n=typeof t=="function"?t:re(t),r=e==null?mo:typeof e=="function"?e:yt(e);return this.select(function(){return this.insertBefore(n.apply(this,arguments),r.apply(this,arguments)||null)})}function go(){var t=this.parentNode;t&&t.removeChild(this)}function Hn(){return this.each(go)}function xo(){var t=this.cloneNode(!1),e=this.parentNode;return e?e.insertBefore(t,this.nextSibling):t}function vo(){var t=this.cloneNode(!0),e=this.parentNode;return e?e.insertBefore(t,this.nextSibling):t}function Vn(t){return this.select(t?vo:xo)}function Fn(t){return arguments.length?this.property("__data__",t):this.node().__data__}function yo(t){return function(e){t.call(this,e,this.__data__)}}function wo(t){return t.trim().split(/^|\s+/).map(function(e){var n="",r=e.indexOf(".");return r>=0&&(n=e.slice(r+1),e=e.slice(0,r)),{type:e,name:n}})}function _o(t){return function(){var e=this.__on;if(e){for(var n=0,r=-1,i=e.length,o;n<i;++n)o=e[n],(!t.type||o.type===t.type)&&o.name===t.name?this.removeEventListener(o.type,o.listener,o.options):e[++r]=o;++r?e.length=r:delete this.__on}}}function bo(t,e,n){return function(){var r=this.__on,i,o=yo(e);if(r){for(var a=0,s=r.length;a<s;++a)if((i=r[a]).type===t.type&&i.name===t.name){this.removeEventListener(i.type,i.listener,i.options),this.addEventListener(i.type,i.listener=o,i.options=n),i.value=e;return}}this.addEventListener(t.type,o,n),i={type:t.type,name:t.name,value:e,listener:o,options:n},r?r.push(i):this.__on=[i]}}function Xn(t,e,n){var r=wo(t+""),i,o=r.length,a;if(arguments.length<2){var s=this.node().__on;if(s){for(var u=0,l=s.length,f;u<l;++u)for(i=0,f=s[u];i<o;++i)if((a=r[i]).type===f.type&&a.name===f.name)return f.value}return}for(s=e?bo:_o,i=0;i<o;++i)this.each(s(r[i],e,n));return this}function Yn(t,e,n){var r=ae(t),i=r.CustomEvent;typeof i=="function"?i=new i(e,n):(i=r.document.createEvent("Event"),n?(i.initEvent(e,n.bubbles,n.cancelable),i.detail=n.detail):i.initEvent(e,!1,!1)),t.dispatchEvent(i)}function Eo(t,e){return function(){return Yn(this,t,e)}}function Mo(t,e){return function(){return Yn(this,t,e.apply(this,arguments))}}function Un(t,e){return this.each((typeof e=="function"?Mo:Eo)(t,e))}function*Zn(){for(var t=this._groups,e=0,n=t.length;e<n;++e)for(var r=t[e],i=0,o=r.length,a;i<o;++i)(a=r[i])&&(yield a)}var Le=[null];function O(t,e){this._groups=t,this._parents=e}function Qn(){return new O([[document.documentElement]],Le)}function So(){return this}O.prototype=Qn.prototype={constructor:O,select:ln,selectAll:fn,selectChild:cn,selectChildren:hn,filter:pn,data:gn,enter:dn,exit:xn,join:vn,merge:yn,selection:So,order:wn,sort:_n,call:bn,nodes:En,node:Mn,size:Sn,empty:Nn,each:kn,attr:An,style:Tn,property:In,classed:Ln,text:On,html:Gn,raise:qn,lower:Bn,append:Rn,insert:Pn,remove:Hn,clone:Vn,datum:Fn,on:Xn,dispatch:Un,[Symbol.iterator]:Zn};var lt=Qn;function F(t){return typeof t=="string"?new O([[document.querySelector(t)]],[document.documentElement]):new O([[t]],Le)}function Kn(t){let e;for(;e=t.sourceEvent;)t=e;return t}function K(t,e){if(t=Kn(t),e===void 0&&(e=t.currentTarget),e){var n=e.ownerSVGElement||e;if(n.createSVGPoint){var r=n.createSVGPoint();return r.x=t.clientX,r.y=t.clientY,r=r.matrixTransform(e.getScreenCTM().inverse()),[r.x,r.y]}if(e.getBoundingClientRect){var i=e.getBoundingClientRect();return[t.clientX-i.left-e.clientLeft,t.clientY-i.top-e.clientTop]}}return[t.pageX,t.pageY]}var Wn={passive:!1},wt={capture:!0,passive:!1};function se(t){t.stopImmediatePropagation()}function pt(t){t.preventDefault(),t.stopImmediatePropagation()}function Gt(t){var e=t.document.documentElement,n=F(t).on("dragstart.drag",pt,wt);"onselectstart"in e?n.on("selectstart.drag",pt,wt):(e.__noselect=e.style.MozUserSelect,e.style.MozUserSelect="none")}function qt(t,e){var n=t.document.documentElement,r=F(t).on("dragstart.drag",null);e&&(r.on("click.drag",pt,wt),setTimeout(function(){r.on("click.drag",null)},0)),"onselectstart"in n?r.on("selectstart.drag",null):(n.style.MozUserSelect=n.__noselect,delete n.__noselect)}var Bt=t=>()=>t;function Rt(t,{sourceEvent:e,subject:n,target:r,identifier:i,active:o,x:a,y:s,dx:u,dy:l,dispatch:f}){Object.defineProperties(this,{type:{value:t,enumerable:!0,configurable:!0},sourceEvent:{value:e,enumerable:!0,configurable:!0},subject:{value:n,enumerable:!0,configurable:!0},target:{value:r,enumerable:!0,configurable:!0},identifier:{value:i,enumerable:!0,configurable:!0},active:{value:o,enumerable:!0,configurable:!0},x:{value:a,enumerable:!0,configurable:!0},y:{value:s,enumerable:!0,configurable:!0},dx:{value:u,enumerable:!0,configurable:!0},dy:{value:l,enumerable:!0,configurable:!0},_:{value:f}})}Rt.prototype.on=function(){var t=this._.on.apply(this._,arguments);return t===this._?this:t};function No(t){return!t.ctrlKey&&!t.button}function ko(){return this.parentNode}function Ao(t,e){return e??{x:t.x,y:t.y}}function To(){return navigator.maxTouchPoints||"ontouchstart"in this}function Oe(){var t=No,e=ko,n=Ao,r=To,i={},o=st("start","drag","end"),a=0,s,u,l,f,g=0;function h(d){d.on("mousedown.drag",c).filter(r).on("touchstart.drag",x).on("touchmove.drag",m,Wn).on("touchend.drag touchcancel.drag",_).style("touch-action","none").style("-webkit-tap-highlight-color","rgba(0,0,0,0)")}function c(d,M){if(!(f||!t.call(this,d,M))){var N=S(this,e.call(this,d,M),d,M,"mouse");N&&(F(d.view).on("mousemove.drag",w,wt).on("mouseup.drag",v,wt),Gt(d.view),se(d),l=!1,s=d.clientX,u=d.clientY,N("start",d))}}function w(d){if(pt(d),!l){var M=d.clientX-s,N=d.clientY-u;l=M*M+N*N>g}i.mouse("drag",d)}function v(d){F(d.view).on("mousemove.drag mouseup.drag",null),qt(d.view,l),pt(d),i.mouse("end",d)}function x(d,M){if(t.call(this,d,M)){var N=d.changedTouches,A=e.call(this,d,M),$=N.length,L,z;for(L=0;L<$;++L)(z=S(this,A,d,M,N[L].identifier,N[L]))&&(se(d),z("start",d,N[L]))}}function m(d){var M=d.changedTouches,N=M.length,A,$;for(A=0;A<N;++A)($=i[M[A].identifier])&&(pt(d),$("drag",d,M[A]))}function _(d){var M=d.changedTouches,N=M.length,A,$;for(f&&clearTimeout(f),f=setTimeout(function(){f=null},500),A=0;A<N;++A)($=i[M[A].identifier])&&(se(d),$("end",d,M[A]))}function S(d,M,N,A,$,L){var z=o.copy(),G=K(L||N,M),Q,U,p;if((p=n.call(d,new Rt("beforestart",{sourceEvent:N,target:h,identifier:$,active:a,x:G[0],y:G[1],dx:0,dy:0,dispatch:z}),A))!=null)return Q=p.x-G[0]||0,U=p.y-G[1]||0,function b(y,E,k){var T=G,I;switch(y){case"start":i[$]=b,I=a++;break;case"end":delete i[$],--a;case"drag":G=K(k||E,M),I=a;break}z.call(y,d,new Rt(y,{sourceEvent:E,subject:p,target:h,identifier:$,active:I,x:G[0]+Q,y:G[1]+U,dx:G[0]-T[0],dy:G[1]-T[1],dispatch:z}),A)}}return h.filter=function(d){return arguments.length?(t=typeof d=="function"?d:Bt(!!d),h):t},h.container=function(d){return arguments.length?(e=typeof d=="function"?d:Bt(d),h):e},h.subject=function(d){return arguments.length?(n=typeof d=="function"?d:Bt(d),h):n},h.touchable=function(d){return arguments.length?(r=typeof d=="function"?d:Bt(!!d),h):r},h.on=function(){var d=o.on.apply(o,arguments);return d===o?h:d},h.clickDistance=function(d){return arguments.length?(g=(d=+d)*d,h):Math.sqrt(g)},h}function Jn(t){let e=+this._x.call(null,t),n=+this._y.call(null,t);return jn(this.cover(e,n),e,n,t)}function jn(t,e,n,r){if(isNaN(e)||isNaN(n))return t;var i,o=t._root,a={data:r},s=t._x0,u=t._y0,l=t._x1,f=t._y1,g,h,c,w,v,x,m,_;if(!o)return t._root=a,t;for(;o.length;)if((v=e>=(g=(s+l)/2))?s=g:l=g,(x=n>=(h=(u+f)/2))?u=h:f=h,i=o,!(o=o[m=x<<1|v]))return i[m]=a,t;if(c=+t._x.call(null,o.data),w=+t._y.call(null,o.data),e===c&&n===w)return a.next=o,i?i[m]=a:t._root=a,t;do i=i?i[m]=new Array(4):t._root=new Array(4),(v=e>=(g=(s+l)/2))?s=g:l=g,(x=n>=(h=(u+f)/2))?u=h:f=h;while((m=x<<1|v)===(_=(w>=h)<<1|c>=g));return i[_]=o,i[m]=a,t}function tr(t){var e,n,r=t.length,i,o,a=new Array(r),s=new Array(r),u=1/0,l=1/0,f=-1/0,g=-1/0;for(n=0;n<r;++n)isNaN(i=+this._x.call(null,e=t[n]))||isNaN(o=+this._y.call(null,e))||(a[n]=i,s[n]=o,i<u&&(u=i),i>f&&(f=i),o<l&&(l=o),o>g&&(g=o));if(u>f||l>g)return this;for(this.cover(u,l).cover(f,g),n=0;n<r;++n)jn(this,a[n],s[n],t[n]);return this}function er(t,e){if(isNaN(t=+t)||isNaN(e=+e))return this;var n=this._x0,r=this._y0,i=this._x1,o=this._y1;if(isNaN(n))i=(n=Math.floor(t))+1,o=(r=Math.floor(e))+1;else{for(var a=i-n||1,s=this._root,u,l;n>t||t>=i||r>e||e>=o;)switch(l=(e<r)<<1|t<n,u=new Array(4),u[l]=s,s=u,a*=2,l){case 0:i=n+a,o=r+a;break;case 1:n=i-a,o=r+a;break;case 2:i=n+a,r=o-a;break;case 3:n=i-a,r=o-a;break}this._root&&this._root.length&&(this._root=s)}return this._x0=n,this._y0=r,this._x1=i,this._y1=o,this}function nr(){var t=[];return this.visit(function(e){if(!e.length)do t.push(e.data);while(e=e.next)}),t}function rr(t){return arguments.length?this.cover(+t[0][0],+t[0][1]).cover(+t[1][0],+t[1][1]):isNaN(this._x0)?void 0:[[this._x0,this._y0],[this._x1,this._y1]]}function P(t,e,n,r,i){this.node=t,this.x0=e,this.y0=n,this.x1=r,this.y1=i}function ir(t,e,n){var r,i=this._x0,o=this._y0,a,s,u,l,f=this._x1,g=this._y1,h=[],c=this._root,w,v;for(c&&h.push(new P(c,i,o,f,g)),n==null?n=1/0:(i=t-n,o=e-n,f=t+n,g=e+n,n*=n);w=h.pop();)if(!(!(c=w.node)||(a=w.x0)>f||(s=w.y0)>g||(u=w.x1)<i||(l=w.y1)<o))if(c.length){var x=(a+u)/2,m=(s+l)/2;h.push(new P(c[3],x,m,u,l),new P(c[2],a,m,x,l),new P(c[1],x,s,u,m),new P(c[0],a,s,x,m)),(v=(e>=m)<<1|t>=x)&&(w=h[h.length-1],h[h.length-1]=h[h.length-1-v],h[h.length-1-v]=w)}else{var _=t-+this._x.call(null,c.data),S=e-+this._y.call(null,c.data),d=_*_+S*S;if(d<n){var M=Math.sqrt(n=d);i=t-M,o=e-M,f=t+M,g=e+M,r=c.data}}return r}function or(t){if(isNaN(f=+this._x.call(null,t))||isNaN(g=+this._y.call(null,t)))return this;var e,n=this._root,r,i,o,a=this._x0,s=this._y0,u=this._x1,l=this._y1,f,g,h,c,w,v,x,m;if(!n)return this;if(n.length)for(;;){if((w=f>=(h=(a+u)/2))?a=h:u=h,(v=g>=(c=(s+l)/2))?s=c:l=c,e=n,!(n=n[x=v<<1|w]))return this;if(!n.length)break;(e[x+1&3]||e[x+2&3]||e[x+3&3])&&(r=e,m=x)}for(;n.data!==t;)if(i=n,!(n=n.next))return this;return(o=n.next)&&delete n.next,i?(o?i.next=o:delete i.next,this):e?(o?e[x]=o:delete e[x],(n=e[0]||e[1]||e[2]||e[3])&&n===(e[3]||e[2]||e[1]||e[0])&&!n.length&&(r?r[m]=n:this._root=n),this):(this._root=o,this)}function ar(t){for(var e=0,n=t.length;e<n;++e)this.remove(t[e]);return this}function sr(){return this._root}function ur(){var t=0;return this.visit(function(e){if(!e.length)do++t;while(e=e.next)}),t}function lr(t){var e=[],n,r=this._root,i,o,a,s,u;for(r&&e.push(new P(r,this._x0,this._y0,this._x1,this._y1));n=e.pop();)if(!t(r=n.node,o=n.x0,a=n.y0,s=n.x1,u=n.y1)&&r.length){var l=(o+s)/2,f=(a+u)/2;(i=r[3])&&e.push(new P(i,l,f,s,u)),(i=r[2])&&e.push(new P(i,o,f,l,u)),(i=r[1])&&e.push(new P(i,l,a,s,f)),(i=r[0])&&e.push(new P(i,o,a,l,f))}return this}function fr(t){var e=[],n=[],r;for(this._root&&e.push(new P(this._root,this._x0,this._y0,this._x1,this._y1));r=e.pop();){var i=r.node;if(i.length){var o,a=r.x0,s=r.y0,u=r.x1,l=r.y1,f=(a+u)/2,g=(s+l)/2;(o=i[0])&&e.push(new P(o,a,s,f,g)),(o=i[1])&&e.push(new P(o,f,s,u,g)),(o=i[2])&&e.push(new P(o,a,g,f,l)),(o=i[3])&&e.push(new P(o,f,g,u,l))}n.push(r)}for(;r=n.pop();)t(r.node,r.x0,r.y0,r.x1,r.y1);return this}function cr(t){return t[0]}function hr(t){return arguments.length?(this._x=t,this):this._x}function pr(t){return t[1]}function dr(t){return arguments.length?(this._y=t,this):this._y}function _t(t,e,n){var r=new Ge(e??cr,n??pr,NaN,NaN,NaN,NaN);return t==null?r:r.addAll(t)}function Ge(t,e,n,r,i,o){this._x=t,this._y=e,this._x0=n,this._y0=r,this._x1=i,this._y1=o,this._root=void 0}function mr(t){for(var e={data:t.data},n=e;t=t.next;)n=n.next={data:t.data};return e}var X=_t.prototype=Ge.prototype;X.copy=function(){var t=new Ge(this._x,this._y,this._x0,this._y0,this._x1,this._y1),e=this._root,n,r;if(!e)return t;if(!e.length)return t._root=mr(e),t;for(n=[{source:e,target:t._root=new Array(4)}];e=n.pop();)for(var i=0;i<4;++i)(r=e.source[i])&&(r.length?n.push({source:r,target:e.target[i]=new Array(4)}):e.target[i]=mr(r));return t};X.add=Jn;X.addAll=tr;X.cover=er;X.data=nr;X.extent=rr;X.find=ir;X.remove=or;X.removeAll=ar;X.root=sr;X.size=ur;X.visit=lr;X.visitAfter=fr;X.x=hr;X.y=dr;function B(t){return function(){return t}}function tt(t){return(t()-.5)*1e-6}function Io(t){return t.x+t.vx}function $o(t){return t.y+t.vy}function qe(t){var e,n,r,i=1,o=1;typeof t!="function"&&(t=B(t==null?1:+t));function a(){for(var l,f=e.length,g,h,c,w,v,x,m=0;m<o;++m)for(g=_t(e,Io,$o).visitAfter(s),l=0;l<f;++l)h=e[l],v=n[h.index],x=v*v,c=h.x+h.vx,w=h.y+h.vy,g.visit(_);function _(S,d,M,N,A){var $=S.data,L=S.r,z=v+L;if($){if($.index>h.index){var G=c-$.x-$.vx,Q=w-$.y-$.vy,U=G*G+Q*Q;U<z*z&&(G===0&&(G=tt(r),U+=G*G),Q===0&&(Q=tt(r),U+=Q*Q),U=(z-(U=Math.sqrt(U)))/U*i,h.vx+=(G*=U)*(z=(L*=L)/(x+L)),h.vy+=(Q*=U)*z,$.vx-=G*(z=1-z),$.vy-=Q*z)}return}return d>c+z||N<c-z||M>w+z||A<w-z}}function s(l){if(l.data)return l.r=n[l.data.index];for(var f=l.r=0;f<4;++f)l[f]&&l[f].r>l.r&&(l.r=l[f].r)}function u(){if(e){var l,f=e.length,g;for(n=new Array(f),l=0;l<f;++l)g=e[l],n[g.index]=+t(g,l,e)}}return a.initialize=function(l,f){e=l,r=f,u()},a.iterations=function(l){return arguments.length?(o=+l,a):o},a.strength=function(l){return arguments.length?(i=+l,a):i},a.radius=function(l){return arguments.length?(t=typeof l=="function"?l:B(+l),u(),a):t},a}function Co(t){return t.index}function gr(t,e){var n=t.get(e);if(!n)throw new Error("node not found: "+e);return n}function Be(t){var e=Co,n=g,r,i=B(30),o,a,s,u,l,f=1;t==null&&(t=[]);function g(x){return 1/Math.min(s[x.source.index],s[x.target.index])}function h(x){for(var m=0,_=t.length;m<f;++m)for(var S=0,d,M,N,A,$,L,z;S<_;++S)d=t[S],M=d.source,N=d.target,A=N.x+N.vx-M.x-M.vx||tt(l),$=N.y+N.vy-M.y-M.vy||tt(l),L=Math.sqrt(A*A+$*$),L=(L-o[S])/L*x*r[S],A*=L,$*=L,N.vx-=A*(z=u[S]),N.vy-=$*z,M.vx+=A*(z=1-z),M.vy+=$*z}function c(){if(a){var x,m=a.length,_=t.length,S=new Map(a.map((M,N)=>[e(M,N,a),M])),d;for(x=0,s=new Array(m);x<_;++x)d=t[x],d.index=x,typeof d.source!="object"&&(d.source=gr(S,d.source)),typeof d.target!="object"&&(d.target=gr(S,d.target)),s[d.source.index]=(s[d.source.index]||0)+1,s[d.target.index]=(s[d.target.index]||0)+1;for(x=0,u=new Array(_);x<_;++x)d=t[x],u[x]=s[d.source.index]/(s[d.source.index]+s[d.target.index]);r=new Array(_),w(),o=new Array(_),v()}}function w(){if(a)for(var x=0,m=t.length;x<m;++x)r[x]=+n(t[x],x,t)}function v(){if(a)for(var x=0,m=t.length;x<m;++x)o[x]=+i(t[x],x,t)}return h.initialize=function(x,m){a=x,l=m,c()},h.links=function(x){return arguments.length?(t=x,c(),h):t},h.id=function(x){return arguments.length?(e=x,h):e},h.iterations=function(x){return arguments.length?(f=+x,h):f},h.strength=function(x){return arguments.length?(n=typeof x=="function"?x:B(+x),w(),h):n},h.distance=function(x){return arguments.length?(i=typeof x=="function"?x:B(+x),v(),h):i},h}var kt=0,Ht=0,Pt=0,vr=1e3,ue,Vt,le=0,bt=0,fe=0,Ft=typeof performance=="object"&&performance.now?performance:Date,yr=typeof window=="object"&&window.requestAnimationFrame?window.requestAnimationFrame.bind(window):function(t){setTimeout(t,17)};function Yt(){return bt||(yr(zo),bt=Ft.now()+fe)}function zo(){bt=0}function Xt(){this._call=this._time=this._next=null}Xt.prototype=At.prototype={constructor:Xt,restart:function(t,e,n){if(typeof t!="function")throw new TypeError("callback is not a function");n=(n==null?Yt():+n)+(e==null?0:+e),!this._next&&Vt!==this&&(Vt?Vt._next=this:ue=this,Vt=this),this._call=t,this._time=n,Re()},stop:function(){this._call&&(this._call=null,this._time=1/0,Re())}};function At(t,e,n){var r=new Xt;return r.restart(t,e,n),r}function wr(){Yt(),++kt;for(var t=ue,e;t;)(e=bt-t._time)>=0&&t._call.call(void 0,e),t=t._next;--kt}function xr(){bt=(le=Ft.now())+fe,kt=Ht=0;try{wr()}finally{kt=0,Lo(),bt=0}}function Do(){var t=Ft.now(),e=t-le;e>vr&&(fe-=e,le=t)}function Lo(){for(var t,e=ue,n,r=1/0;e;)e._call?(r>e._time&&(r=e._time),t=e,e=e._next):(n=e._next,e._next=null,e=t?t._next=n:ue=n);Vt=t,Re(r)}function Re(t){if(!kt){Ht&&(Ht=clearTimeout(Ht));var e=t-bt;e>24?(t<1/0&&(Ht=setTimeout(xr,t-Ft.now()-fe)),Pt&&(Pt=clearInterval(Pt))):(Pt||(le=Ft.now(),Pt=setInterval(Do,vr)),kt=1,yr(xr))}}function ce(t,e,n){var r=new Xt;return e=e==null?0:+e,r.restart(i=>{r.stop(),t(i+e)},e,n),r}function _r(){let t=1;return()=>(t=(1664525*t+1013904223)%4294967296)/4294967296}function br(t){return t.x}function Er(t){return t.y}var Oo=10,Go=Math.PI*(3-Math.sqrt(5));function Pe(t){var e,n=1,r=.001,i=1-Math.pow(r,1/300),o=0,a=.6,s=new Map,u=At(g),l=st("tick","end"),f=_r();t==null&&(t=[]);function g(){h(),l.call("tick",e),n<r&&(u.stop(),l.call("end",e))}function h(v){var x,m=t.length,_;v===void 0&&(v=1);for(var S=0;S<v;++S)for(n+=(o-n)*i,s.forEach(function(d){d(n)}),x=0;x<m;++x)_=t[x],_.fx==null?_.x+=_.vx*=a:(_.x=_.fx,_.vx=0),_.fy==null?_.y+=_.vy*=a:(_.y=_.fy,_.vy=0);return e}function c(){for(var v=0,x=t.length,m;v<x;++v){if(m=t[v],m.index=v,m.fx!=null&&(m.x=m.fx),m.fy!=null&&(m.y=m.fy),isNaN(m.x)||isNaN(m.y)){var _=Oo*Math.sqrt(.5+v),S=v*Go;m.x=_*Math.cos(S),m.y=_*Math.sin(S)}(isNaN(m.vx)||isNaN(m.vy))&&(m.vx=m.vy=0)}}function w(v){return v.initialize&&v.initialize(t,f),v}return c(),e={tick:h,restart:function(){return u.restart(g),e},stop:function(){return u.stop(),e},nodes:function(v){return arguments.length?(t=v,c(),s.forEach(w),e):t},alpha:function(v){return arguments.length?(n=+v,e):n},alphaMin:function(v){return arguments.length?(r=+v,e):r},alphaDecay:function(v){return arguments.length?(i=+v,e):+i},alphaTarget:function(v){return arguments.length?(o=+v,e):o},velocityDecay:function(v){return arguments.length?(a=1-v,e):1-a},randomSource:function(v){return arguments.length?(f=v,s.forEach(w),e):f},force:function(v,x){return arguments.length>1?(x==null?s.delete(v):s.set(v,w(x)),e):s.get(v)},find:function(v,x,m){var _=0,S=t.length,d,M,N,A,$;for(m==null?m=1/0:m*=m,_=0;_<S;++_)A=t[_],d=v-A.x,M=x-A.y,N=d*d+M*M,N<m&&($=A,m=N);return $},on:function(v,x){return arguments.length>1?(l.on(v,x),e):l.on(v)}}}function He(){var t,e,n,r,i=B(-30),o,a=1,s=1/0,u=.81;function l(c){var w,v=t.length,x=_t(t,br,Er).visitAfter(g);for(r=c,w=0;w<v;++w)e=t[w],x.visit(h)}function f(){if(t){var c,w=t.length,v;for(o=new Array(w),c=0;c<w;++c)v=t[c],o[v.index]=+i(v,c,t)}}function g(c){var w=0,v,x,m=0,_,S,d;if(c.length){for(_=S=d=0;d<4;++d)(v=c[d])&&(x=Math.abs(v.value))&&(w+=v.value,m+=x,_+=x*v.x,S+=x*v.y);c.x=_/m,c.y=S/m}else{v=c,v.x=v.data.x,v.y=v.data.y;do w+=o[v.data.index];while(v=v.next)}c.value=w}function h(c,w,v,x){if(!c.value)return!0;var m=c.x-e.x,_=c.y-e.y,S=x-w,d=m*m+_*_;if(S*S/u<d)return d<s&&(m===0&&(m=tt(n),d+=m*m),_===0&&(_=tt(n),d+=_*_),d<a&&(d=Math.sqrt(a*d)),e.vx+=m*c.value*r/d,e.vy+=_*c.value*r/d),!0;if(c.length||d>=s)return;(c.data!==e||c.next)&&(m===0&&(m=tt(n),d+=m*m),_===0&&(_=tt(n),d+=_*_),d<a&&(d=Math.sqrt(a*d)));do c.data!==e&&(S=o[c.data.index]*r/d,e.vx+=m*S,e.vy+=_*S);while(c=c.next)}return l.initialize=function(c,w){t=c,n=w,f()},l.strength=function(c){return arguments.length?(i=typeof c=="function"?c:B(+c),f(),l):i},l.distanceMin=function(c){return arguments.length?(a=c*c,l):Math.sqrt(a)},l.distanceMax=function(c){return arguments.length?(s=c*c,l):Math.sqrt(s)},l.theta=function(c){return arguments.length?(u=c*c,l):Math.sqrt(u)},l}function Ve(t){var e=B(.1),n,r,i;typeof t!="function"&&(t=B(t==null?0:+t));function o(s){for(var u=0,l=n.length,f;u<l;++u)f=n[u],f.vx+=(i[u]-f.x)*r[u]*s}function a(){if(n){var s,u=n.length;for(r=new Array(u),i=new Array(u),s=0;s<u;++s)r[s]=isNaN(i[s]=+t(n[s],s,n))?0:+e(n[s],s,n)}}return o.initialize=function(s){n=s,a()},o.strength=function(s){return arguments.length?(e=typeof s=="function"?s:B(+s),a(),o):e},o.x=function(s){return arguments.length?(t=typeof s=="function"?s:B(+s),a(),o):t},o}function Fe(t){var e=B(.1),n,r,i;typeof t!="function"&&(t=B(t==null?0:+t));function o(s){for(var u=0,l=n.length,f;u<l;++u)f=n[u],f.vy+=(i[u]-f.y)*r[u]*s}function a(){if(n){var s,u=n.length;for(r=new Array(u),i=new Array(u),s=0;s<u;++s)r[s]=isNaN(i[s]=+t(n[s],s,n))?0:+e(n[s],s,n)}}return o.initialize=function(s){n=s,a()},o.strength=function(s){return arguments.length?(e=typeof s=="function"?s:B(+s),a(),o):e},o.y=function(s){return arguments.length?(t=typeof s=="function"?s:B(+s),a(),o):t},o}function he(t,e,n){t.prototype=e.prototype=n,n.constructor=t}function Xe(t,e){var n=Object.create(t.prototype);for(var r in e)n[r]=e[r];return n}function Qt(){}var Ut=.7,me=1/Ut,Tt="\\s*([+-]?\\d+)\\s*",Zt="\\s*([+-]?(?:\\d*\\.)?\\d+(?:[eE][+-]?\\d+)?)\\s*",it="\\s*([+-]?(?:\\d*\\.)?\\d+(?:[eE][+-]?\\d+)?)%\\s*",qo=/^#([0-9a-f]{3,8})$/,Bo=new RegExp(`^rgb\\(${Tt},${Tt},${Tt}\\)$`),Ro=new RegExp(`^rgb\\(${it},${it},${it}\\)$`),Po=new RegExp(`^rgba\\(${Tt},${Tt},${Tt},${Zt}\\)$`),Ho=new RegExp(`^rgba\\(${it},${it},${it},${Zt}\\)$`),Vo=new RegExp(`^hsl\\(${Zt},${it},${it}\\)$`),Fo=new RegExp(`^hsla\\(${Zt},${it},${it},${Zt}\\)$`),Mr={aliceblue:15792383,antiquewhite:16444375,aqua:65535,aquamarine:8388564,azure:15794175,beige:16119260,bisque:16770244,black:0,blanchedalmond:16772045,blue:255,blueviolet:9055202,brown:10824234,burlywood:14596231,cadetblue:6266528,chartreuse:8388352,chocolate:13789470,coral:16744272,cornflowerblue:6591981,cornsilk:16775388,crimson:14423100,cyan:65535,darkblue:139,darkcyan:35723,darkgoldenrod:12092939,darkgray:11119017,darkgreen:25600,darkgrey:11119017,darkkhaki:12433259,darkmagenta:9109643,darkolivegreen:5597999,darkorange:16747520,darkorchid:10040012,darkred:9109504,darksalmon:15308410,darkseagreen:9419919,darkslateblue:4734347,darkslategray:3100495,darkslategrey:3100495,darkturquoise:52945,darkviolet:9699539,deeppink:16716947,deepskyblue:49151,dimgray:6908265,dimgrey:6908265,dodgerblue:2003199,firebrick:11674146,floralwhite:16775920,forestgreen:2263842,fuchsia:16711935,gainsboro:14474460,ghostwhite:16316671,gold:16766720,goldenrod:14329120,gray:8421504,green:32768,greenyellow:11403055,grey:8421504,honeydew:15794160,hotpink:16738740,indianred:13458524,indigo:4915330,ivory:16777200,khaki:15787660,lavender:15132410,lavenderblush:16773365,lawngreen:8190976,lemonchiffon:16775885,lightblue:11393254,lightcoral:15761536,lightcyan:14745599,lightgoldenrodyellow:16448210,lightgray:13882323,lightgreen:9498256,lightgrey:13882323,lightpink:16758465,lightsalmon:16752762,lightseagreen:2142890,lightskyblue:8900346,lightslategray:7833753,lightslategrey:7833753,lightsteelblue:11584734,lightyellow:16777184,lime:65280,limegreen:3329330,linen:16445670,magenta:16711935,maroon:8388608,mediumaquamarine:6737322,mediumblue:205,mediumorchid:12211667,mediumpurple:9662683,mediumseagreen:3978097,mediumslateblue:8087790,mediumspringgreen:64154,mediumturquoise:4772300,mediumvioletred:13047173,midnightblue:1644912,mintcream:16121850,mistyrose:16770273,moccasin:16770229,navajowhite:16768685,navy:128,oldlace:16643558,olive:8421376,olivedrab:7048739,orange:16753920,orangered:16729344,orchid:14315734,palegoldenrod:15657130,palegreen:10025880,paleturquoise:11529966,palevioletred:14381203,papayawhip:16773077,peachpuff:16767673,peru:13468991,pink:16761035,plum:14524637,powderblue:11591910,purple:8388736,rebeccapurple:6697881,red:16711680,rosybrown:12357519,royalblue:4286945,saddlebrown:9127187,salmon:16416882,sandybrown:16032864,seagreen:3050327,seashell:16774638,sienna:10506797,silver:12632256,skyblue:8900331,slateblue:6970061,slategray:7372944,slategrey:7372944,snow:16775930,springgreen:65407,steelblue:4620980,tan:13808780,teal:32896,thistle:14204888,tomato:16737095,turquoise:4251856,violet:15631086,wheat:16113331,white:16777215,whitesmoke:16119285,yellow:16776960,yellowgreen:10145074};he(Qt,dt,{copy(t){return Object.assign(new this.constructor,this,t)},displayable(){return this.rgb().displayable()},hex:Sr,formatHex:Sr,formatHex8:Xo,formatHsl:Yo,formatRgb:Nr,toString:Nr});function Sr(){return this.rgb().formatHex()}function Xo(){return this.rgb().formatHex8()}function Yo(){return Cr(this).formatHsl()}function Nr(){return this.rgb().formatRgb()}function dt(t){var e,n;return t=(t+"").trim().toLowerCase(),(e=qo.exec(t))?(n=e[1].length,e=parseInt(e[1],16),n===6?kr(e):n===3?new Z(e>>8&15|e>>4&240,e>>4&15|e&240,(e&15)<<4|e&15,1):n===8?pe(e>>24&255,e>>16&255,e>>8&255,(e&255)/255):n===4?pe(e>>12&15|e>>8&240,e>>8&15|e>>4&240,e>>4&15|e&240,((e&15)<<4|e&15)/255):null):(e=Bo.exec(t))?new Z(e[1],e[2],e[3],1):(e=Ro.exec(t))?new Z(e[1]*255/100,e[2]*255/100,e[3]*255/100,1):(e=Po.exec(t))?pe(e[1],e[2],e[3],e[4]):(e=Ho.exec(t))?pe(e[1]*255/100,e[2]*255/100,e[3]*255/100,e[4]):(e=Vo.exec(t))?Ir(e[1],e[2]/100,e[3]/100,1):(e=Fo.exec(t))?Ir(e[1],e[2]/100,e[3]/100,e[4]):Mr.hasOwnProperty(t)?kr(Mr[t]):t==="transparent"?new Z(NaN,NaN,NaN,0):null}function kr(t){return new Z(t>>16&255,t>>8&255,t&255,1)}function pe(t,e,n,r){return r<=0&&(t=e=n=NaN),new Z(t,e,n,r)}function Uo(t){return t instanceof Qt||(t=dt(t)),t?(t=t.rgb(),new Z(t.r,t.g,t.b,t.opacity)):new Z}function It(t,e,n,r){return arguments.length===1?Uo(t):new Z(t,e,n,r??1)}function Z(t,e,n,r){this.r=+t,this.g=+e,this.b=+n,this.opacity=+r}he(Z,It,Xe(Qt,{brighter(t){return t=t==null?me:Math.pow(me,t),new Z(this.r*t,this.g*t,this.b*t,this.opacity)},darker(t){return t=t==null?Ut:Math.pow(Ut,t),new Z(this.r*t,this.g*t,this.b*t,this.opacity)},rgb(){return this},clamp(){return new Z(Mt(this.r),Mt(this.g),Mt(this.b),ge(this.opacity))},displayable(){return-.5<=this.r&&this.r<255.5&&-.5<=this.g&&this.g<255.5&&-.5<=this.b&&this.b<255.5&&0<=this.opacity&&this.opacity<=1},hex:Ar,formatHex:Ar,formatHex8:Zo,formatRgb:Tr,toString:Tr}));function Ar(){return`#${Et(this.r)}${Et(this.g)}${Et(this.b)}`}function Zo(){return`#${Et(this.r)}${Et(this.g)}${Et(this.b)}${Et((isNaN(this.opacity)?1:this.opacity)*255)}`}function Tr(){let t=ge(this.opacity);return`${t===1?"rgb(":"rgba("}${Mt(this.r)}, ${Mt(this.g)}, ${Mt(this.b)}${t===1?")":`, ${t})`}`}function ge(t){return isNaN(t)?1:Math.max(0,Math.min(1,t))}function Mt(t){return Math.max(0,Math.min(255,Math.round(t)||0))}function Et(t){return t=Mt(t),(t<16?"0":"")+t.toString(16)}function Ir(t,e,n,r){return r<=0?t=e=n=NaN:n<=0||n>=1?t=e=NaN:e<=0&&(t=NaN),new et(t,e,n,r)}function Cr(t){if(t instanceof et)return new et(t.h,t.s,t.l,t.opacity);if(t instanceof Qt||(t=dt(t)),!t)return new et;if(t instanceof et)return t;t=t.rgb();var e=t.r/255,n=t.g/255,r=t.b/255,i=Math.min(e,n,r),o=Math.max(e,n,r),a=NaN,s=o-i,u=(o+i)/2;return s?(e===o?a=(n-r)/s+(n<r)*6:n===o?a=(r-e)/s+2:a=(e-n)/s+4,s/=u<.5?o+i:2-o-i,a*=60):s=u>0&&u<1?0:a,new et(a,s,u,t.opacity)}function zr(t,e,n,r){return arguments.length===1?Cr(t):new et(t,e,n,r??1)}function et(t,e,n,r){this.h=+t,this.s=+e,this.l=+n,this.opacity=+r}he(et,zr,Xe(Qt,{brighter(t){return t=t==null?me:Math.pow(me,t),new et(this.h,this.s,this.l*t,this.opacity)},darker(t){return t=t==null?Ut:Math.pow(Ut,t),new et(this.h,this.s,this.l*t,this.opacity)},rgb(){var t=this.h%360+(this.h<0)*360,e=isNaN(t)||isNaN(this.s)?0:this.s,n=this.l,r=n+(n<.5?n:1-n)*e,i=2*n-r;return new Z(Ye(t>=240?t-240:t+120,i,r),Ye(t,i,r),Ye(t<120?t+240:t-120,i,r),this.opacity)},clamp(){return new et($r(this.h),de(this.s),de(this.l),ge(this.opacity))},displayable(){return(0<=this.s&&this.s<=1||isNaN(this.s))&&0<=this.l&&this.l<=1&&0<=this.opacity&&this.opacity<=1},formatHsl(){let t=ge(this.opacity);return`${t===1?"hsl(":"hsla("}${$r(this.h)}, ${de(this.s)*100}%, ${de(this.l)*100}%${t===1?")":`, ${t})`}`}}));function $r(t){return t=(t||0)%360,t<0?t+360:t}function de(t){return Math.max(0,Math.min(1,t||0))}function Ye(t,e,n){return(t<60?e+(n-e)*t/60:t<180?n:t<240?e+(n-e)*(240-t)/60:e)*255}function Ue(t,e,n,r,i){var o=t*t,a=o*t;return((1-3*t+3*o-a)*e+(4-6*o+3*a)*n+(1+3*t+3*o-3*a)*r+a*i)/6}function Dr(t){var e=t.length-1;return function(n){var r=n<=0?n=0:n>=1?(n=1,e-1):Math.floor(n*e),i=t[r],o=t[r+1],a=r>0?t[r-1]:2*i-o,s=r<e-1?t[r+2]:2*o-i;return Ue((n-r/e)*e,a,i,o,s)}}function Lr(t){var e=t.length;return function(n){var r=Math.floor(((n%=1)<0?++n:n)*e),i=t[(r+e-1)%e],o=t[r%e],a=t[(r+1)%e],s=t[(r+2)%e];return Ue((n-r/e)*e,i,o,a,s)}}var Ze=t=>()=>t;function Qo(t,e){return function(n){return t+n*e}}function Ko(t,e,n){return t=Math.pow(t,n),e=Math.pow(e,n)-t,n=1/n,function(r){return Math.pow(t+r*e,n)}}function Or(t){return(t=+t)==1?xe:function(e,n){return n-e?Ko(e,n,t):Ze(isNaN(e)?n:e)}}function xe(t,e){var n=e-t;return n?Qo(t,n):Ze(isNaN(t)?e:t)}var ve=function t(e){var n=Or(e);function r(i,o){var a=n((i=It(i)).r,(o=It(o)).r),s=n(i.g,o.g),u=n(i.b,o.b),l=xe(i.opacity,o.opacity);return function(f){return i.r=a(f),i.g=s(f),i.b=u(f),i.opacity=l(f),i+""}}return r.gamma=t,r}(1);function Gr(t){return function(e){var n=e.length,r=new Array(n),i=new Array(n),o=new Array(n),a,s;for(a=0;a<n;++a)s=It(e[a]),r[a]=s.r||0,i[a]=s.g||0,o[a]=s.b||0;return r=t(r),i=t(i),o=t(o),s.opacity=1,function(u){return s.r=r(u),s.g=i(u),s.b=o(u),s+""}}}var Wo=Gr(Dr),Jo=Gr(Lr);function W(t,e){return t=+t,e=+e,function(n){return t*(1-n)+e*n}}var Ke=/[-+]?(?:\d+\.?\d*|\.?\d+)(?:[eE][-+]?\d+)?/g,Qe=new RegExp(Ke.source,"g");function jo(t){return function(){return t}}function ta(t){return function(e){return t(e)+""}}function We(t,e){var n=Ke.lastIndex=Qe.lastIndex=0,r,i,o,a=-1,s=[],u=[];for(t=t+"",e=e+"";(r=Ke.exec(t))&&(i=Qe.exec(e));)(o=i.index)>n&&(o=e.slice(n,o),s[a]?s[a]+=o:s[++a]=o),(r=r[0])===(i=i[0])?s[a]?s[a]+=i:s[++a]=i:(s[++a]=null,u.push({i:a,x:W(r,i)})),n=Qe.lastIndex;return n<e.length&&(o=e.slice(n),s[a]?s[a]+=o:s[++a]=o),s.length<2?u[0]?ta(u[0].x):jo(e):(e=u.length,function(l){for(var f=0,g;f<e;++f)s[(g=u[f]).i]=g.x(l);return s.join("")})}var qr=180/Math.PI,ye={translateX:0,translateY:0,rotate:0,skewX:0,scaleX:1,scaleY:1};function Je(t,e,n,r,i,o){var a,s,u;return(a=Math.sqrt(t*t+e*e))&&(t/=a,e/=a),(u=t*n+e*r)&&(n-=t*u,r-=e*u),(s=Math.sqrt(n*n+r*r))&&(n/=s,r/=s,u/=s),t*r<e*n&&(t=-t,e=-e,u=-u,a=-a),{translateX:i,translateY:o,rotate:Math.atan2(e,t)*qr,skewX:Math.atan(u)*qr,scaleX:a,scaleY:s}}var we;function Br(t){let e=new(typeof DOMMatrix=="function"?DOMMatrix:WebKitCSSMatrix)(t+"");return e.isIdentity?ye:Je(e.a,e.b,e.c,e.d,e.e,e.f)}function Rr(t){return t==null?ye:(we||(we=document.createElementNS("http://www.w3.org/2000/svg","g")),we.setAttribute("transform",t),(t=we.transform.baseVal.consolidate())?(t=t.matrix,Je(t.a,t.b,t.c,t.d,t.e,t.f)):ye)}function Pr(t,e,n,r){function i(l){return l.length?l.pop()+" ":""}function o(l,f,g,h,c,w){if(l!==g||f!==h){var v=c.push("translate(",null,e,null,n);w.push({i:v-4,x:W(l,g)},{i:v-2,x:W(f,h)})}else(g||h)&&c.push("translate("+g+e+h+n)}function a(l,f,g,h){l!==f?(l-f>180?f+=360:f-l>180&&(l+=360),h.push({i:g.push(i(g)+"rotate(",null,r)-2,x:W(l,f)})):f&&g.push(i(g)+"rotate("+f+r)}function s(l,f,g,h){l!==f?h.push({i:g.push(i(g)+"skewX(",null,r)-2,x:W(l,f)}):f&&g.push(i(g)+"skewX("+f+r)}function u(l,f,g,h,c,w){if(l!==g||f!==h){var v=c.push(i(c)+"scale(",null,",",null,")");w.push({i:v-4,x:W(l,g)},{i:v-2,x:W(f,h)})}else(g!==1||h!==1)&&c.push(i(c)+"scale("+g+","+h+")")}return function(l,f){var g=[],h=[];return l=t(l),f=t(f),o(l.translateX,l.translateY,f.translateX,f.translateY,g,h),a(l.rotate,f.rotate,g,h),s(l.skewX,f.skewX,g,h),u(l.scaleX,l.scaleY,f.scaleX,f.scaleY,g,h),l=f=null,function(c){for(var w=-1,v=h.length,x;++w<v;)g[(x=h[w]).i]=x.x(c);return g.join("")}}}var je=Pr(Br,"px, ","px)","deg)"),tn=Pr(Rr,", ",")",")");var ea=1e-12;function Hr(t){return((t=Math.exp(t))+1/t)/2}function na(t){return((t=Math.exp(t))-1/t)/2}function ra(t){return((t=Math.exp(2*t))-1)/(t+1)}var en=function t(e,n,r){function i(o,a){var s=o[0],u=o[1],l=o[2],f=a[0],g=a[1],h=a[2],c=f-s,w=g-u,v=c*c+w*w,x,m;if(v<ea)m=Math.log(h/l)/e,x=function(A){return[s+A*c,u+A*w,l*Math.exp(e*A*m)]};else{var _=Math.sqrt(v),S=(h*h-l*l+r*v)/(2*l*n*_),d=(h*h-l*l-r*v)/(2*h*n*_),M=Math.log(Math.sqrt(S*S+1)-S),N=Math.log(Math.sqrt(d*d+1)-d);m=(N-M)/e,x=function(A){var $=A*m,L=Hr(M),z=l/(n*_)*(L*ra(e*$+M)-na(M));return[s+z*c,u+z*w,l*L/Hr(e*$+M)]}}return x.duration=m*1e3*e/Math.SQRT2,x}return i.rho=function(o){var a=Math.max(.001,+o),s=a*a,u=s*s;return t(a,s,u)},i}(Math.SQRT2,2,4);var ia=st("start","end","cancel","interrupt"),oa=[],Xr=0,Vr=1,be=2,_e=3,Fr=4,Ee=5,Kt=6;function mt(t,e,n,r,i,o){var a=t.__transition;if(!a)t.__transition={};else if(n in a)return;aa(t,n,{name:e,index:r,group:i,on:ia,tween:oa,time:o.time,delay:o.delay,duration:o.duration,ease:o.ease,timer:null,state:Xr})}function Wt(t,e){var n=R(t,e);if(n.state>Xr)throw new Error("too late; already scheduled");return n}function V(t,e){var n=R(t,e);if(n.state>_e)throw new Error("too late; already running");return n}function R(t,e){var n=t.__transition;if(!n||!(n=n[e]))throw new Error("transition not found");return n}function aa(t,e,n){var r=t.__transition,i;r[e]=n,n.timer=At(o,0,n.time);function o(l){n.state=Vr,n.timer.restart(a,n.delay,n.time),n.delay<=l&&a(l-n.delay)}function a(l){var f,g,h,c;if(n.state!==Vr)return u();for(f in r)if(c=r[f],c.name===n.name){if(c.state===_e)return ce(a);c.state===Fr?(c.state=Kt,c.timer.stop(),c.on.call("interrupt",t,t.__data__,c.index,c.group),delete r[f]):+f<e&&(c.state=Kt,c.timer.stop(),c.on.call("cancel",t,t.__data__,c.index,c.group),delete r[f])}if(ce(function(){n.state===_e&&(n.state=Fr,n.timer.restart(s,n.delay,n.time),s(l))}),n.state=be,n.on.call("start",t,t.__data__,n.index,n.group),n.state===be){for(n.state=_e,i=new Array(h=n.tween.length),f=0,g=-1;f<h;++f)(c=n.tween[f].value.call(t,t.__data__,n.index,n.group))&&(i[++g]=c);i.length=g+1}}function s(l){for(var f=l<n.duration?n.ease.call(null,l/n.duration):(n.timer.restart(u),n.state=Ee,1),g=-1,h=i.length;++g<h;)i[g].call(t,f);n.state===Ee&&(n.on.call("end",t,t.__data__,n.index,n.group),u())}function u(){n.state=Kt,n.timer.stop(),delete r[e];for(var l in r)return;delete t.__transition}}function St(t,e){var n=t.__transition,r,i,o=!0,a;if(n){e=e==null?null:e+"";for(a in n){if((r=n[a]).name!==e){o=!1;continue}i=r.state>be&&r.state<Ee,r.state=Kt,r.timer.stop(),r.on.call(i?"interrupt":"cancel",t,t.__data__,r.index,r.group),delete n[a]}o&&delete t.__transition}}function Yr(t){return this.each(function(){St(this,t)})}function sa(t,e){var n,r;return function(){var i=V(this,t),o=i.tween;if(o!==n){r=n=o;for(var a=0,s=r.length;a<s;++a)if(r[a].name===e){r=r.slice(),r.splice(a,1);break}}i.tween=r}}function ua(t,e,n){var r,i;if(typeof n!="function")throw new Error;return function(){var o=V(this,t),a=o.tween;if(a!==r){i=(r=a).slice();for(var s={name:e,value:n},u=0,l=i.length;u<l;++u)if(i[u].name===e){i[u]=s;break}u===l&&i.push(s)}o.tween=i}}function Ur(t,e){var n=this._id;if(t+="",arguments.length<2){for(var r=R(this.node(),n).tween,i=0,o=r.length,a;i<o;++i)if((a=r[i]).name===t)return a.value;return null}return this.each((e==null?sa:ua)(n,t,e))}function $t(t,e,n){var r=t._id;return t.each(function(){var i=V(this,r);(i.value||(i.value={}))[e]=n.apply(this,arguments)}),function(i){return R(i,r).value[e]}}function Me(t,e){var n;return(typeof e=="number"?W:e instanceof dt?ve:(n=dt(e))?(e=n,ve):We)(t,e)}function la(t){return function(){this.removeAttribute(t)}}function fa(t){return function(){this.removeAttributeNS(t.space,t.local)}}function ca(t,e,n){var r,i=n+"",o;return function(){var a=this.getAttribute(t);return a===i?null:a===r?o:o=e(r=a,n)}}function ha(t,e,n){var r,i=n+"",o;return function(){var a=this.getAttributeNS(t.space,t.local);return a===i?null:a===r?o:o=e(r=a,n)}}function pa(t,e,n){var r,i,o;return function(){var a,s=n(this),u;return s==null?void this.removeAttribute(t):(a=this.getAttribute(t),u=s+"",a===u?null:a===r&&u===i?o:(i=u,o=e(r=a,s)))}}function da(t,e,n){var r,i,o;return function(){var a,s=n(this),u;return s==null?void this.removeAttributeNS(t.space,t.local):(a=this.getAttributeNS(t.space,t.local),u=s+"",a===u?null:a===r&&u===i?o:(i=u,o=e(r=a,s)))}}function Zr(t,e){var n=ut(t),r=n==="transform"?tn:Me;return this.attrTween(t,typeof e=="function"?(n.local?da:pa)(n,r,$t(this,"attr."+t,e)):e==null?(n.local?fa:la)(n):(n.local?ha:ca)(n,r,e))}function ma(t,e){return function(n){this.setAttribute(t,e.call(this,n))}}function ga(t,e){return function(n){this.setAttributeNS(t.space,t.local,e.call(this,n))}}function xa(t,e){var n,r;function i(){var o=e.apply(this,arguments);return o!==r&&(n=(r=o)&&ga(t,o)),n}return i._value=e,i}function va(t,e){var n,r;function i(){var o=e.apply(this,arguments);return o!==r&&(n=(r=o)&&ma(t,o)),n}return i._value=e,i}function Qr(t,e){var n="attr."+t;if(arguments.length<2)return(n=this.tween(n))&&n._value;if(e==null)return this.tween(n,null);if(typeof e!="function")throw new Error;var r=ut(t);return this.tween(n,(r.local?xa:va)(r,e))}function ya(t,e){return function(){Wt(this,t).delay=+e.apply(this,arguments)}}function wa(t,e){return e=+e,function(){Wt(this,t).delay=e}}function Kr(t){var e=this._id;return arguments.length?this.each((typeof t=="function"?ya:wa)(e,t)):R(this.node(),e).delay}function _a(t,e){return function(){V(this,t).duration=+e.apply(this,arguments)}}function ba(t,e){return e=+e,function(){V(this,t).duration=e}}function Wr(t){var e=this._id;return arguments.length?this.each((typeof t=="function"?_a:ba)(e,t)):R(this.node(),e).duration}function Ea(t,e){if(typeof e!="function")throw new Error;return function(){V(this,t).ease=e}}function Jr(t){var e=this._id;return arguments.length?this.each(Ea(e,t)):R(this.node(),e).ease}function Ma(t,e){return function(){var n=e.apply(this,arguments);if(typeof n!="function")throw new Error;V(this,t).ease=n}}function jr(t){if(typeof t!="function")throw new Error;return this.each(Ma(this._id,t))}function ti(t){typeof t!="function"&&(t=Lt(t));for(var e=this._groups,n=e.length,r=new Array(n),i=0;i<n;++i)for(var o=e[i],a=o.length,s=r[i]=[],u,l=0;l<a;++l)(u=o[l])&&t.call(u,u.__data__,l,o)&&s.push(u);return new Y(r,this._parents,this._name,this._id)}function ei(t){if(t._id!==this._id)throw new Error;for(var e=this._groups,n=t._groups,r=e.length,i=n.length,o=Math.min(r,i),a=new Array(r),s=0;s<o;++s)for(var u=e[s],l=n[s],f=u.length,g=a[s]=new Array(f),h,c=0;c<f;++c)(h=u[c]||l[c])&&(g[c]=h);for(;s<r;++s)a[s]=e[s];return new Y(a,this._parents,this._name,this._id)}function Sa(t){return(t+"").trim().split(/^|\s+/).every(function(e){var n=e.indexOf(".");return n>=0&&(e=e.slice(0,n)),!e||e==="start"})}function Na(t,e,n){var r,i,o=Sa(e)?Wt:V;return function(){var a=o(this,t),s=a.on;s!==r&&(i=(r=s).copy()).on(e,n),a.on=i}}function ni(t,e){var n=this._id;return arguments.length<2?R(this.node(),n).on.on(t):this.each(Na(n,t,e))}function ka(t){return function(){var e=this.parentNode;for(var n in this.__transition)if(+n!==t)return;e&&e.removeChild(this)}}function ri(){return this.on("end.remove",ka(this._id))}function ii(t){var e=this._name,n=this._id;typeof t!="function"&&(t=yt(t));for(var r=this._groups,i=r.length,o=new Array(i),a=0;a<i;++a)for(var s=r[a],u=s.length,l=o[a]=new Array(u),f,g,h=0;h<u;++h)(f=s[h])&&(g=t.call(f,f.__data__,h,s))&&("__data__"in f&&(g.__data__=f.__data__),l[h]=g,mt(l[h],e,n,h,l,R(f,n)));return new Y(o,this._parents,e,n)}function oi(t){var e=this._name,n=this._id;typeof t!="function"&&(t=Dt(t));for(var r=this._groups,i=r.length,o=[],a=[],s=0;s<i;++s)for(var u=r[s],l=u.length,f,g=0;g<l;++g)if(f=u[g]){for(var h=t.call(f,f.__data__,g,u),c,w=R(f,n),v=0,x=h.length;v<x;++v)(c=h[v])&&mt(c,e,n,v,h,w);o.push(h),a.push(f)}return new Y(o,a,e,n)}var Aa=lt.prototype.constructor;function ai(){return new Aa(this._groups,this._parents)}function Ta(t,e){var n,r,i;return function(){var o=ht(this,t),a=(this.style.removeProperty(t),ht(this,t));return o===a?null:o===n&&a===r?i:i=e(n=o,r=a)}}function si(t){return function(){this.style.removeProperty(t)}}function Ia(t,e,n){var r,i=n+"",o;return function(){var a=ht(this,t);return a===i?null:a===r?o:o=e(r=a,n)}}function $a(t,e,n){var r,i,o;return function(){var a=ht(this,t),s=n(this),u=s+"";return s==null&&(u=s=(this.style.removeProperty(t),ht(this,t))),a===u?null:a===r&&u===i?o:(i=u,o=e(r=a,s))}}function Ca(t,e){var n,r,i,o="style."+e,a="end."+o,s;return function(){var u=V(this,t),l=u.on,f=u.value[o]==null?s||(s=si(e)):void 0;(l!==n||i!==f)&&(r=(n=l).copy()).on(a,i=f),u.on=r}}function ui(t,e,n){var r=(t+="")=="transform"?je:Me;return e==null?this.styleTween(t,Ta(t,r)).on("end.style."+t,si(t)):typeof e=="function"?this.styleTween(t,$a(t,r,$t(this,"style."+t,e))).each(Ca(this._id,t)):this.styleTween(t,Ia(t,r,e),n).on("end.style."+t,null)}function za(t,e,n){return function(r){this.style.setProperty(t,e.call(this,r),n)}}function Da(t,e,n){var r,i;function o(){var a=e.apply(this,arguments);return a!==i&&(r=(i=a)&&za(t,a,n)),r}return o._value=e,o}function li(t,e,n){var r="style."+(t+="");if(arguments.length<2)return(r=this.tween(r))&&r._value;if(e==null)return this.tween(r,null);if(typeof e!="function")throw new Error;return this.tween(r,Da(t,e,n??""))}function La(t){return function(){this.textContent=t}}function Oa(t){return function(){var e=t(this);this.textContent=e??""}}function fi(t){return this.tween("text",typeof t=="function"?Oa($t(this,"text",t)):La(t==null?"":t+""))}function Ga(t){return function(e){this.textContent=t.call(this,e)}}function qa(t){var e,n;function r(){var i=t.apply(this,arguments);return i!==n&&(e=(n=i)&&Ga(i)),e}return r._value=t,r}function ci(t){var e="text";if(arguments.length<1)return(e=this.tween(e))&&e._value;if(t==null)return this.tween(e,null);if(typeof t!="function")throw new Error;return this.tween(e,qa(t))}function hi(){for(var t=this._name,e=this._id,n=Se(),r=this._groups,i=r.length,o=0;o<i;++o)for(var a=r[o],s=a.length,u,l=0;l<s;++l)if(u=a[l]){var f=R(u,e);mt(u,t,n,l,a,{time:f.time+f.delay+f.duration,delay:0,duration:f.duration,ease:f.ease})}return new Y(r,this._parents,t,n)}function pi(){var t,e,n=this,r=n._id,i=n.size();return new Promise(function(o,a){var s={value:a},u={value:function(){--i===0&&o()}};n.each(function(){var l=V(this,r),f=l.on;f!==t&&(e=(t=f).copy(),e._.cancel.push(s),e._.interrupt.push(s),e._.end.push(u)),l.on=e}),i===0&&o()})}var Ba=0;function Y(t,e,n,r){this._groups=t,this._parents=e,this._name=n,this._id=r}function di(t){return lt().transition(t)}function Se(){return++Ba}var ft=lt.prototype;Y.prototype=di.prototype={constructor:Y,select:ii,selectAll:oi,selectChild:ft.selectChild,selectChildren:ft.selectChildren,filter:ti,merge:ei,selection:ai,transition:hi,call:ft.call,nodes:ft.nodes,node:ft.node,size:ft.size,empty:ft.empty,each:ft.each,on:ni,attr:Zr,attrTween:Qr,style:ui,styleTween:li,text:fi,textTween:ci,remove:ri,tween:Ur,delay:Kr,duration:Wr,ease:Jr,easeVarying:jr,end:pi,[Symbol.iterator]:ft[Symbol.iterator]};function Ne(t){return((t*=2)<=1?t*t*t:(t-=2)*t*t+2)/2}var Ra={time:null,delay:0,duration:250,ease:Ne};function Pa(t,e){for(var n;!(n=t.__transition)||!(n=n[e]);)if(!(t=t.parentNode))throw new Error(`transition ${e} not found`);return n}function mi(t){var e,n;t instanceof Y?(e=t._id,t=t._name):(e=Se(),(n=Ra).time=Yt(),t=t==null?null:t+"");for(var r=this._groups,i=r.length,o=0;o<i;++o)for(var a=r[o],s=a.length,u,l=0;l<s;++l)(u=a[l])&&mt(u,t,e,l,a,n||Pa(u,e));return new Y(r,this._parents,t,e)}lt.prototype.interrupt=Yr;lt.prototype.transition=mi;var Jt=t=>()=>t;function nn(t,{sourceEvent:e,target:n,transform:r,dispatch:i}){Object.defineProperties(this,{type:{value:t,enumerable:!0,configurable:!0},sourceEvent:{value:e,enumerable:!0,configurable:!0},target:{value:n,enumerable:!0,configurable:!0},transform:{value:r,enumerable:!0,configurable:!0},_:{value:i}})}function nt(t,e,n){this.k=t,this.x=e,this.y=n}nt.prototype={constructor:nt,scale:function(t){return t===1?this:new nt(this.k*t,this.x,this.y)},translate:function(t,e){return t===0&e===0?this:new nt(this.k,this.x+this.k*t,this.y+this.k*e)},apply:function(t){return[t[0]*this.k+this.x,t[1]*this.k+this.y]},applyX:function(t){return t*this.k+this.x},applyY:function(t){return t*this.k+this.y},invert:function(t){return[(t[0]-this.x)/this.k,(t[1]-this.y)/this.k]},invertX:function(t){return(t-this.x)/this.k},invertY:function(t){return(t-this.y)/this.k},rescaleX:function(t){return t.copy().domain(t.range().map(this.invertX,this).map(t.invert,t))},rescaleY:function(t){return t.copy().domain(t.range().map(this.invertY,this).map(t.invert,t))},toString:function(){return"translate("+this.x+","+this.y+") scale("+this.k+")"}};var Nt=new nt(1,0,0);jt.prototype=nt.prototype;function jt(t){for(;!t.__zoom;)if(!(t=t.parentNode))return Nt;return t.__zoom}function ke(t){t.stopImmediatePropagation()}function Ct(t){t.preventDefault(),t.stopImmediatePropagation()}function Ha(t){return(!t.ctrlKey||t.type==="wheel")&&!t.button}function Va(){var t=this;return t instanceof SVGElement?(t=t.ownerSVGElement||t,t.hasAttribute("viewBox")?(t=t.viewBox.baseVal,[[t.x,t.y],[t.x+t.width,t.y+t.height]]):[[0,0],[t.width.baseVal.value,t.height.baseVal.value]]):[[0,0],[t.clientWidth,t.clientHeight]]}function gi(){return this.__zoom||Nt}function Fa(t){return-t.deltaY*(t.deltaMode===1?.05:t.deltaMode?1:.002)*(t.ctrlKey?10:1)}function Xa(){return navigator.maxTouchPoints||"ontouchstart"in this}function Ya(t,e,n){var r=t.invertX(e[0][0])-n[0][0],i=t.invertX(e[1][0])-n[1][0],o=t.invertY(e[0][1])-n[0][1],a=t.invertY(e[1][1])-n[1][1];return t.translate(i>r?(r+i)/2:Math.min(0,r)||Math.max(0,i),a>o?(o+a)/2:Math.min(0,o)||Math.max(0,a))}function rn(){var t=Ha,e=Va,n=Ya,r=Fa,i=Xa,o=[0,1/0],a=[[-1/0,-1/0],[1/0,1/0]],s=250,u=en,l=st("start","zoom","end"),f,g,h,c=500,w=150,v=0,x=10;function m(p){p.property("__zoom",gi).on("wheel.zoom",$,{passive:!1}).on("mousedown.zoom",L).on("dblclick.zoom",z).filter(i).on("touchstart.zoom",G).on("touchmove.zoom",Q).on("touchend.zoom touchcancel.zoom",U).style("-webkit-tap-highlight-color","rgba(0,0,0,0)")}m.transform=function(p,b,y,E){var k=p.selection?p.selection():p;k.property("__zoom",gi),p!==k?M(p,b,y,E):k.interrupt().each(function(){N(this,arguments).event(E).start().zoom(null,typeof b=="function"?b.apply(this,arguments):b).end()})},m.scaleBy=function(p,b,y,E){m.scaleTo(p,function(){var k=this.__zoom.k,T=typeof b=="function"?b.apply(this,arguments):b;return k*T},y,E)},m.scaleTo=function(p,b,y,E){m.transform(p,function(){var k=e.apply(this,arguments),T=this.__zoom,I=y==null?d(k):typeof y=="function"?y.apply(this,arguments):y,D=T.invert(I),q=typeof b=="function"?b.apply(this,arguments):b;return n(S(_(T,q),I,D),k,a)},y,E)},m.translateBy=function(p,b,y,E){m.transform(p,function(){return n(this.__zoom.translate(typeof b=="function"?b.apply(this,arguments):b,typeof y=="function"?y.apply(this,arguments):y),e.apply(this,arguments),a)},null,E)},m.translateTo=function(p,b,y,E,k){m.transform(p,function(){var T=e.apply(this,arguments),I=this.__zoom,D=E==null?d(T):typeof E=="function"?E.apply(this,arguments):E;return n(Nt.translate(D[0],D[1]).scale(I.k).translate(typeof b=="function"?-b.apply(this,arguments):-b,typeof y=="function"?-y.apply(this,arguments):-y),T,a)},E,k)};function _(p,b){return b=Math.max(o[0],Math.min(o[1],b)),b===p.k?p:new nt(b,p.x,p.y)}function S(p,b,y){var E=b[0]-y[0]*p.k,k=b[1]-y[1]*p.k;return E===p.x&&k===p.y?p:new nt(p.k,E,k)}function d(p){return[(+p[0][0]+ +p[1][0])/2,(+p[0][1]+ +p[1][1])/2]}function M(p,b,y,E){p.on("start.zoom",function(){N(this,arguments).event(E).start()}).on("interrupt.zoom end.zoom",function(){N(this,arguments).event(E).end()}).tween("zoom",function(){var k=this,T=arguments,I=N(k,T).event(E),D=e.apply(k,T),q=y==null?d(D):typeof y=="function"?y.apply(k,T):y,rt=Math.max(D[1][0]-D[0][0],D[1][1]-D[0][1]),H=k.__zoom,J=typeof b=="function"?b.apply(k,T):b,ot=u(H.invert(q).concat(rt/H.k),J.invert(q).concat(rt/J.k));return function(j){if(j===1)j=J;else{var at=ot(j),Ie=rt/at[2];j=new nt(Ie,q[0]-at[0]*Ie,q[1]-at[1]*Ie)}I.zoom(null,j)}})}function N(p,b,y){return!y&&p.__zooming||new A(p,b)}function A(p,b){this.that=p,this.args=b,this.active=0,this.sourceEvent=null,this.extent=e.apply(p,b),this.taps=0}A.prototype={event:function(p){return p&&(this.sourceEvent=p),this},start:function(){return++this.active===1&&(this.that.__zooming=this,this.emit("start")),this},zoom:function(p,b){return this.mouse&&p!=="mouse"&&(this.mouse[1]=b.invert(this.mouse[0])),this.touch0&&p!=="touch"&&(this.touch0[1]=b.invert(this.touch0[0])),this.touch1&&p!=="touch"&&(this.touch1[1]=b.invert(this.touch1[0])),this.that.__zoom=b,this.emit("zoom"),this},end:function(){return--this.active===0&&(delete this.that.__zooming,this.emit("end")),this},emit:function(p){var b=F(this.that).datum();l.call(p,this.that,new nn(p,{sourceEvent:this.sourceEvent,target:m,type:p,transform:this.that.__zoom,dispatch:l}),b)}};function $(p,...b){if(!t.apply(this,arguments))return;var y=N(this,b).event(p),E=this.__zoom,k=Math.max(o[0],Math.min(o[1],E.k*Math.pow(2,r.apply(this,arguments)))),T=K(p);if(y.wheel)(y.mouse[0][0]!==T[0]||y.mouse[0][1]!==T[1])&&(y.mouse[1]=E.invert(y.mouse[0]=T)),clearTimeout(y.wheel);else{if(E.k===k)return;y.mouse=[T,E.invert(T)],St(this),y.start()}Ct(p),y.wheel=setTimeout(I,w),y.zoom("mouse",n(S(_(E,k),y.mouse[0],y.mouse[1]),y.extent,a));function I(){y.wheel=null,y.end()}}function L(p,...b){if(h||!t.apply(this,arguments))return;var y=p.currentTarget,E=N(this,b,!0).event(p),k=F(p.view).on("mousemove.zoom",q,!0).on("mouseup.zoom",rt,!0),T=K(p,y),I=p.clientX,D=p.clientY;Gt(p.view),ke(p),E.mouse=[T,this.__zoom.invert(T)],St(this),E.start();function q(H){if(Ct(H),!E.moved){var J=H.clientX-I,ot=H.clientY-D;E.moved=J*J+ot*ot>v}E.event(H).zoom("mouse",n(S(E.that.__zoom,E.mouse[0]=K(H,y),E.mouse[1]),E.extent,a))}function rt(H){k.on("mousemove.zoom mouseup.zoom",null),qt(H.view,E.moved),Ct(H),E.event(H).end()}}function z(p,...b){if(t.apply(this,arguments)){var y=this.__zoom,E=K(p.changedTouches?p.changedTouches[0]:p,this),k=y.invert(E),T=y.k*(p.shiftKey?.5:2),I=n(S(_(y,T),E,k),e.apply(this,b),a);Ct(p),s>0?F(this).transition().duration(s).call(M,I,E,p):F(this).call(m.transform,I,E,p)}}function G(p,...b){if(t.apply(this,arguments)){var y=p.touches,E=y.length,k=N(this,b,p.changedTouches.length===E).event(p),T,I,D,q;for(ke(p),I=0;I<E;++I)D=y[I],q=K(D,this),q=[q,this.__zoom.invert(q),D.identifier],k.touch0?!k.touch1&&k.touch0[2]!==q[2]&&(k.touch1=q,k.taps=0):(k.touch0=q,T=!0,k.taps=1+!!f);f&&(f=clearTimeout(f)),T&&(k.taps<2&&(g=q[0],f=setTimeout(function(){f=null},c)),St(this),k.start())}}function Q(p,...b){if(this.__zooming){var y=N(this,b).event(p),E=p.changedTouches,k=E.length,T,I,D,q;for(Ct(p),T=0;T<k;++T)I=E[T],D=K(I,this),y.touch0&&y.touch0[2]===I.identifier?y.touch0[0]=D:y.touch1&&y.touch1[2]===I.identifier&&(y.touch1[0]=D);if(I=y.that.__zoom,y.touch1){var rt=y.touch0[0],H=y.touch0[1],J=y.touch1[0],ot=y.touch1[1],j=(j=J[0]-rt[0])*j+(j=J[1]-rt[1])*j,at=(at=ot[0]-H[0])*at+(at=ot[1]-H[1])*at;I=_(I,Math.sqrt(j/at)),D=[(rt[0]+J[0])/2,(rt[1]+J[1])/2],q=[(H[0]+ot[0])/2,(H[1]+ot[1])/2]}else if(y.touch0)D=y.touch0[0],q=y.touch0[1];else return;y.zoom("touch",n(S(I,D,q),y.extent,a))}}function U(p,...b){if(this.__zooming){var y=N(this,b).event(p),E=p.changedTouches,k=E.length,T,I;for(ke(p),h&&clearTimeout(h),h=setTimeout(function(){h=null},c),T=0;T<k;++T)I=E[T],y.touch0&&y.touch0[2]===I.identifier?delete y.touch0:y.touch1&&y.touch1[2]===I.identifier&&delete y.touch1;if(y.touch1&&!y.touch0&&(y.touch0=y.touch1,delete y.touch1),y.touch0)y.touch0[1]=this.__zoom.invert(y.touch0[0]);else if(y.end(),y.taps===2&&(I=K(I,this),Math.hypot(g[0]-I[0],g[1]-I[1])<x)){var D=F(this).on("dblclick.zoom");D&&D.apply(this,arguments)}}}return m.wheelDelta=function(p){return arguments.length?(r=typeof p=="function"?p:Jt(+p),m):r},m.filter=function(p){return arguments.length?(t=typeof p=="function"?p:Jt(!!p),m):t},m.touchable=function(p){return arguments.length?(i=typeof p=="function"?p:Jt(!!p),m):i},m.extent=function(p){return arguments.length?(e=typeof p=="function"?p:Jt([[+p[0][0],+p[0][1]],[+p[1][0],+p[1][1]]]),m):e},m.scaleExtent=function(p){return arguments.length?(o[0]=+p[0],o[1]=+p[1],m):[o[0],o[1]]},m.translateExtent=function(p){return arguments.length?(a[0][0]=+p[0][0],a[1][0]=+p[1][0],a[0][1]=+p[0][1],a[1][1]=+p[1][1],m):[[a[0][0],a[0][1]],[a[1][0],a[1][1]]]},m.constrain=function(p){return arguments.length?(n=p,m):n},m.duration=function(p){return arguments.length?(s=+p,m):s},m.interpolate=function(p){return arguments.length?(u=p,m):u},m.on=function(){var p=l.on.apply(l,arguments);return p===l?m:p},m.clickDistance=function(p){return arguments.length?(v=(p=+p)*p,m):Math.sqrt(v)},m.tapDistance=function(p){return arguments.length?(x=+p,m):x},m}var gt=960,xt=600,xi=40,Ae=["#4e79a7","#f28e2c","#e15759","#76b7b2","#59a14f","#edc949","#af7aa1","#ff9da7","#9c755f","#bab0ab"];function te(t,e){let n=t.ownerDocument.createElement("div");n.className="cv-banner",n.setAttribute("role","alert"),n.textContent=e,t.prepend(n),yi(t.ownerDocument)}function yi(t){if(t.getElementById("cv-style"))return;let e=t.createElement("style");e.id="cv-style",e.textContent=`
.cv-wrap { position: relative; width: 100%; height: 100%; font: 13px/1.45 system-ui, sans-serif; color: #24292f; }
.cv-wrap svg { display: block; width: 100%; height: 100%; cursor: grab; }
.cv-banner { background: #b3261e; color: #fff; padding: 10px 14px; font: 14px/1.4 system-ui, sans-serif; }
.cv-panel { position: absolute; top: 10px; right: 10px; width: 230px; background: rgba(255,255,255,0.96);
  border: 1px solid #d0d7de; border-radius: 6px; padding: 10px 12px; box-shadow: 0 1px 4px rgba(0,0,0,0.12); }
.cv-panel label { display: block; margin: 7px 0 2px; font-weight: 600; }
.cv-panel input[type=search] { width: 100%; box-sizing: border-box; }
.cv-panel input[type=range] { width: 100%; }
.cv-panel select { width: 100%; }
.cv-row { display: flex; gap: 6px; flex-wrap: wrap; margin-top: 8px; }
.cv-row button { flex: 1 1 45%; padding: 3px 6px; }
.cv-note { color: #6e7781; min-height: 1.2em; display: block; }
.cv-count { color: #57606a; margin-top: 2px; }
.cv-info { margin-top: 8px; padding-top: 6px; border-top: 1px solid #d8dee4; color: #57606a; }
.cv-hit text { font-weight: 700; }
`,t.head.appendChild(e)}function Ua(t){return`M ${-t} 0 a ${t} ${t} 0 1 0 ${2*t} 0 a ${t} ${t} 0 1 0 ${-2*t} 0`}function Za(t){return`M ${-t} 0 H ${t} M 0 ${-t} V ${t}`}var Te=class{constructor(e,n){this.pts=new Map;this.hits=new Set;this.colorTables=new Map;this.layoutActive=!1;this.layoutDone=Promise.resolve();this.dragBehavior=Oe().container(()=>this.root.node()).on("drag",(e,n)=>{this.pts.set(n.id,{x:e.x,y:e.y}),this.place()});this.container=e,this.doc=e.ownerDocument,this.graph=n,this.maxD=n.edges.reduce((r,i)=>Math.max(r,i.d),0),this.maxFrequency=n.nodes.reduce((r,i)=>Math.max(r,i.frequency),1),this.sliderStep=this.maxD>0?this.maxD/100:1,this.sliderMax=this.maxD>0?this.maxD+this.sliderStep:1,this.state={threshold:0,sizeByFrequency:!0,widthByStrength:!0,colorBy:"single",nodeColor:"#4e79a7",edgeColor:"#9aa0a6",crossMarkers:!0,query:""},yi(this.doc),this.buildDom(),this.installZoom(),n.hasPositions?(this.fitInto(n.nodes.map(r=>({id:r.id,x:r.x,y:-r.y}))),this.rebuild(),this.ready=Promise.resolve()):(this.seedRing(),this.rebuild(),this.ready=this.relayout())}buildDom(){let e=this.doc.createElement("div");e.className="cv-wrap",this.container.appendChild(e);let n=this.doc.createElementNS("http://www.w3.org/2000/svg","svg");n.setAttribute("viewBox",`0 0 ${gt} ${xt}`),n.setAttribute("preserveAspectRatio","xMidYMid meet"),e.appendChild(n),this.svg=F(n),this.svg.append("rect").attr("class","cv-bg").attr("width",gt).attr("height",xt).attr("fill","#ffffff"),this.root=this.svg.append("g").attr("class","cv-root"),this.edgeLayer=this.root.append("g").attr("class","cv-edges"),this.nodeLayer=this.root.append("g").attr("class","cv-nodes");let r=new Set;for(let u of this.graph.nodes)for(let l of Object.keys(u.attrs))r.add(l);let i=['<option value="single">single color</option>','<option value="marker">marker flag</option>'].concat([...r].sort().map(u=>`<option value="attr:${on(u)}">attr: ${on(u)}</option>`)).join(""),o=this.graph.meta,a=[`${o.N} scenarios`,`${o.M} events`,`${o.mode} mode`];o.alpha!==void 0&&a.push(`alpha ${o.alpha}`),o.min_d>0&&a.push(`min d ${o.min_d}`);let s=this.doc.createElement("div");s.className="cv-panel",s.innerHTML=`
<label for="cv-search">search</label>
<input id="cv-search" type="search" placeholder="label substring" autocomplete="off">
<span id="cv-note" class="cv-note"></span>
<label for="cv-threshold">edge threshold (d)</label>
<input id="cv-threshold" type="range" min="0" max="${this.sliderMax}" step="${this.sliderStep}" value="0"${this.graph.edges.length===0?" disabled":""}>
<div class="cv-count"><span id="cv-threshold-value">0.000</span> &middot; <span id="cv-hidden-count"></span></div>
<label for="cv-size">node size</label>
<select id="cv-size"><option value="frequency">by frequency</option><option value="uniform">uniform</option></select>
<label for="cv-color-by">node color</label>
<select id="cv-color-by">${i}</select>
<input id="cv-node-color" type="color" value="${this.state.nodeColor}" title="base node color">
<label><input id="cv-crosses" type="checkbox" checked> draw marked events as crosses</label>
<label for="cv-width">edge width</label>
<select id="cv-width"><option value="strength">by strength</option><option value="uniform">uniform</option></select>
<label for="cv-edge-color">edge color</label>
<input id="cv-edge-color" type="color" value="${this.state.edgeColor}">
<div class="cv-row">
  <button id="cv-relayout" type="button">rerun layout</button>
  <button id="cv-reset" type="button"${this.graph.hasPositions?"":" disabled"}>reset positions</button>
  <button id="cv-export-svg" type="button">export svg</button>
  <button id="cv-export-png" type="button">export png</button>
</div>
<div id="cv-info" class="cv-info">${on(a.join(", "))}</div>
`,e.appendChild(s),this.q("#cv-search").addEventListener("input",u=>{this.search(u.target.value)}),this.q("#cv-threshold").addEventListener("input",u=>{this.setThreshold(parseFloat(u.target.value))}),this.q("#cv-size").addEventListener("change",u=>{this.state.sizeByFrequency=u.target.value==="frequency",this.rebuild()}),this.q("#cv-color-by").addEventListener("change",u=>{this.state.colorBy=u.target.value,this.rebuild()}),this.q("#cv-node-color").addEventListener("input",u=>{this.state.nodeColor=u.target.value,this.rebuild()}),this.q("#cv-crosses").addEventListener("change",u=>{this.state.crossMarkers=u.target.checked,this.rebuild()}),this.q("#cv-width").addEventListener("change",u=>{this.state.widthByStrength=u.target.value==="strength",this.rebuild()}),this.q("#cv-edge-color").addEventListener("input",u=>{this.state.edgeColor=u.target.value,this.rebuild()}),this.q("#cv-relayout").addEventListener("click",()=>{this.relayout()}),this.q("#cv-reset").addEventListener("click",()=>this.resetPositions()),this.q("#cv-export-svg").addEventListener("click",()=>this.downloadSvg()),this.q("#cv-export-png").addEventListener("click",()=>this.downloadPng())}q(e){let n=this.container.querySelector(e);if(!n)throw new Error(`viewer is missing ${e}`);return n}installZoom(){this.zoomBehavior=rn().extent([[0,0],[gt,xt]]).scaleExtent([.2,8]).on("zoom",e=>{this.root.attr("transform",e.transform.toString())}),this.svg.call(this.zoomBehavior)}fitInto(e){if(e.length===0)return;let n=1/0,r=-1/0,i=1/0,o=-1/0;for(let c of e)n=Math.min(n,c.x),r=Math.max(r,c.x),i=Math.min(i,c.y),o=Math.max(o,c.y);let a=r-n,s=o-i,u=a>0?(gt-2*xi)/a:1/0,l=s>0?(xt-2*xi)/s:1/0,f=Number.isFinite(Math.min(u,l))?Math.min(u,l):1,g=(gt-f*a)/2,h=(xt-f*s)/2;this.pts=new Map(e.map(c=>[c.id,{x:g+f*(c.x-n),y:h+f*(c.y-i)}]))}seedRing(){let e=Math.max(this.graph.nodes.length,1);this.fitInto(this.graph.nodes.map((n,r)=>({id:n.id,x:Math.cos(2*Math.PI*r/e),y:Math.sin(2*Math.PI*r/e)})))}radius(e){return this.state.sizeByFrequency?4+11*Math.sqrt(e.frequency/this.maxFrequency):8}edgeWidth(e){return!this.state.widthByStrength||this.maxD<=0?1.5:.75+3.25*(e.d/this.maxD)}nodeFill(e){let n=this.state.colorBy;if(n==="single")return this.state.nodeColor;if(n==="marker")return e.marker?Ae[2]:Ae[0];let r=n.slice(5),i=e.attrs[r];return i===void 0?"#9aa0a6":this.colorFor(r,i)}colorFor(e,n){let r=this.colorTables.get(e);if(!r){let i=[...new Set(this.graph.nodes.map(o=>o.attrs[e]).filter(o=>o!==void 0))].sort();r=new Map(i.map((o,a)=>[o,Ae[a%Ae.length]])),this.colorTables.set(e,r)}return r.get(n)??"#9aa0a6"}rebuild(){let e=this.graph.edges.length,n=this.graph.edges.filter(o=>o.d>=this.state.threshold),r=new Map(this.graph.nodes.map(o=>[o.id,o.label]));this.edgeLayer.selectAll("line.cv-edge").data(n,o=>`${o.source}:${o.target}`).join(o=>{let a=o.append("line").attr("class","cv-edge");return a.append("title"),a}).attr("stroke",this.state.edgeColor).attr("stroke-opacity",.75).attr("stroke-width",o=>this.edgeWidth(o)).attr("data-source",o=>o.source).attr("data-target",o=>o.target).attr("data-d",o=>o.d).select("title").text(o=>`${r.get(o.source)} / ${r.get(o.target)}: c=${o.c}, d=${vi(o.d)}`);let i=this.nodeLayer.selectAll("g.cv-node").data(this.graph.nodes,o=>String(o.id)).join(o=>{let a=o.append("g").attr("class","cv-node");return a.append("circle").attr("class","cv-ring").attr("fill","none"),a.append("path").attr("class","cv-shape"),a.append("text").attr("class","cv-label"),a.append("title"),a}).attr("data-id",o=>o.id).attr("data-label",o=>o.label).classed("cv-hit",o=>this.hits.has(o.id)).call(this.dragBehavior);i.select("circle.cv-ring").attr("r",o=>this.radius(o)+4).attr("stroke","#d4351c").attr("stroke-width",2.5).attr("visibility",o=>this.hits.has(o.id)?"visible":"hidden"),i.select("path.cv-shape").attr("d",o=>{let a=this.radius(o);return o.marker&&this.state.crossMarkers?Za(a):Ua(a)}).attr("fill",o=>o.marker&&this.state.crossMarkers?"none":this.nodeFill(o)).attr("stroke",o=>o.marker&&this.state.crossMarkers?this.nodeFill(o):"#343b41").attr("stroke-width",o=>o.marker&&this.state.crossMarkers?3:1),i.select("text.cv-label").attr("text-anchor","middle").attr("y",o=>-(this.radius(o)+6)).attr("font-size",11).attr("font-family","system-ui, sans-serif").attr("paint-order","stroke").attr("stroke","#ffffff").attr("stroke-width",3).attr("fill","#24292f").text(o=>o.label),i.select("title").text(o=>{let a=Object.entries(o.attrs).map(([s,u])=>`${s}: ${u}`);return[`${o.label}`,`frequency ${o.frequency}`,...a].join(`
`)}),this.q("#cv-hidden-count").textContent=`${e-n.length} of ${e} edges hidden`,this.q("#cv-threshold-value").textContent=vi(this.state.threshold),this.place()}place(){this.nodeLayer.selectAll("g.cv-node").attr("transform",e=>{let n=this.pts.get(e.id);return n?`translate(${n.x},${n.y})`:null}),this.edgeLayer.selectAll("line.cv-edge").attr("x1",e=>this.pts.get(e.source)?.x??0).attr("y1",e=>this.pts.get(e.source)?.y??0).attr("x2",e=>this.pts.get(e.target)?.x??0).attr("y2",e=>this.pts.get(e.target)?.y??0)}setThreshold(e){this.state.threshold=Math.max(0,e),this.rebuild()}search(e){this.state.query=e;let n=e.trim().toLowerCase();if(this.hits=new Set,n.length>0)for(let o of this.graph.nodes)o.label.toLowerCase().includes(n)&&this.hits.add(o.id);let r=this.q("#cv-note");n.length===0?r.textContent="":this.hits.size===0?r.textContent="no matches":r.textContent=`${this.hits.size} of ${this.graph.nodes.length} labels match`,this.rebuild();let i=this.graph.nodes.find(o=>this.hits.has(o.id));i&&this.centerOn(i.id)}centerOn(e){let n=this.pts.get(e),r=this.svg.node();if(!n||!r)return;let i=jt(r),o=Nt.translate(gt/2-i.k*n.x,xt/2-i.k*n.y).scale(i.k);this.svg.call(this.zoomBehavior.transform,o)}resetPositions(){!this.graph.hasPositions||this.layoutActive||(this.fitInto(this.graph.nodes.map(e=>({id:e.id,x:e.x,y:-e.y}))),this.place())}relayout(){if(this.layoutActive)return this.layoutDone;this.layoutActive=!0;let e=new Map(this.graph.nodes.map(s=>[s.id,this.radius(s)])),n=this.graph.nodes.map(s=>({id:s.id})),r=this.graph.edges.map(s=>({source:s.source,target:s.target,d:s.d})),i=this.maxD>0?this.maxD:1,o=Pe(n).force("link",Be(r).id(s=>s.id).distance(70).strength(s=>.2+.8*(s.d/i))).force("charge",He().strength(-220)).force("x",Ve(0).strength(.06)).force("y",Fe(0).strength(.06)).force("collide",qe().radius(s=>(e.get(s.id)??8)+4)).stop(),a=typeof requestAnimationFrame=="function"?s=>requestAnimationFrame(s):s=>setTimeout(s,16);return this.layoutDone=new Promise(s=>{let u=()=>{for(let l=0;l<20&&o.alpha()>o.alphaMin();l++)o.tick();this.fitInto(n.map(l=>({id:l.id,x:l.x??0,y:l.y??0}))),this.place(),o.alpha()>o.alphaMin()?a(u):(this.layoutActive=!1,s())};a(u)}),this.layoutDone}svgMarkup(){let e=this.svg.node();if(!e)return"";let n=e.cloneNode(!0);return n.setAttribute("xmlns","http://www.w3.org/2000/svg"),n.setAttribute("width",String(gt)),n.setAttribute("height",String(xt)),new XMLSerializer().serializeToString(n)}downloadSvg(){let e="data:image/svg+xml;charset=utf-8,"+encodeURIComponent(this.svgMarkup());this.triggerDownload(e,"network.svg")}downloadPng(){let e=this.doc,n=new Image;n.onload=()=>{try{let r=e.createElement("canvas");r.width=gt*2,r.height=xt*2;let i=r.getContext("2d");if(!i)throw new Error("no 2d context");i.drawImage(n,0,0,r.width,r.height),this.triggerDownload(r.toDataURL("image/png"),"network.png")}catch{this.q("#cv-note").textContent="png export is not available here; use svg"}},n.onerror=()=>{this.q("#cv-note").textContent="png export is not available here; use svg"},n.src="data:image/svg+xml;charset=utf-8,"+encodeURIComponent(this.svgMarkup())}triggerDownload(e,n){let r=this.doc.createElement("a");r.href=e,r.download=n,this.doc.body.appendChild(r);try{r.click()}catch{}r.remove()}};function vi(t){return t.toFixed(3)}function on(t){return t.replace(/&/g,"&amp;").replace(/</g,"&lt;").replace(/>/g,"&gt;").replace(/"/g,"&quot;")}function Qa(t=document){let e=t.getElementById("app");if(!e)return null;let n=t.getElementById("graph-data");if(!n)return te(e,"no embedded graph data found (missing #graph-data element)"),null;let r;try{r=JSON.parse(n.textContent??"")}catch(i){return te(e,`could not parse the embedded graph data: ${i.message}`),null}try{return new Te(e,an(r))}catch(i){return i instanceof C?te(e,`graph data failed validation at ${i.field}: ${i.message.slice(i.field.length+2)}`):te(e,`viewer failed to start: ${i.message}`),null}}typeof document<"u"&&document.getElementById("graph-data")&&Qa();})();
